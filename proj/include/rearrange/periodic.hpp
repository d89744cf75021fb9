#pragma once

// The decidable fragment of the limit space: eventually periodic points of
// the symbol space, the gluing vertices they represent, and the gluing
// relation restricted to them.  Only expanding systems are accepted; the
// gluing relation of a non-expanding system need not be transitive.

#include "rearrange/system.hpp"

namespace rearrange {

// An eventually periodic point: preperiod (a nonempty address starting with
// a base edge) followed by an infinitely repeated block of rule edge-ids.
//
// Normal form: the period is primitive (not a proper power) and the
// preperiod is minimal such that the tail is purely periodic, which pins
// the phase.  Structural equality of normal forms then coincides with
// equality of the infinite sequences.
struct PeriodicAddress {
    Address preperiod;
    std::vector<std::string> period;

    std::string symbol_at(std::size_t i) const {
        if (i < preperiod.size()) return preperiod.syms[i];
        return period[(i - preperiod.size()) % period.size()];
    }

    std::vector<std::string> unroll(std::size_t n) const {
        std::vector<std::string> w;
        w.reserve(n);
        for (std::size_t i = 0; i < n; ++i) w.push_back(symbol_at(i));
        return w;
    }

    std::string str() const {
        std::string s = preperiod.str() + "(";
        for (std::size_t i = 0; i < period.size(); ++i) {
            if (i) s += '/';
            s += period[i];
        }
        return s + ")";
    }

    bool operator==(const PeriodicAddress&) const = default;
    auto operator<=>(const PeriodicAddress&) const = default;
};

namespace detail {

inline std::vector<std::string> primitive_root(const std::vector<std::string>& w) {
    for (std::size_t d = 1; d <= w.size(); ++d) {
        if (w.size() % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < w.size() && ok; ++i)
            if (w[i] != w[i % d]) ok = false;
        if (ok) return {w.begin(), w.begin() + static_cast<long>(d)};
    }
    return w;
}

}  // namespace detail

// Normalize and check color consistency along two full passes of the
// period (the color chain stabilizes after one pass).
inline PeriodicAddress normalize_periodic(const ReplacementSystem& sys,
                                          const Graph& base, PeriodicAddress p) {
    if (p.preperiod.empty() || p.period.empty())
        throw Error("periodic address needs nonempty preperiod and period");
    p.period = detail::primitive_root(p.period);
    // minimal preperiod: absorb trailing preperiod symbols that match the
    // tail; each absorption rotates the period right by one
    while (p.preperiod.size() >= 2 && p.preperiod.back() == p.period.back()) {
        std::string last = p.period.back();
        p.period.pop_back();
        p.period.insert(p.period.begin(), last);
        p.preperiod.syms.pop_back();
    }
    // color consistency: resolve preperiod, then two passes of the period
    if (!valid_address(sys, base, p.preperiod))
        throw Error("malformed preperiod: " + p.preperiod.str());
    std::string color = address_color(sys, base, p.preperiod);
    std::vector<std::string> pass1_colors;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < p.period.size(); ++i) {
            auto it = sys.rules.find(color);
            if (it == sys.rules.end() || !it->second.graph.has_edge(p.period[i]))
                throw Error("color-inconsistent period in " + p.str());
            color = it->second.graph.edge(p.period[i]).color;
            if (pass == 0)
                pass1_colors.push_back(color);
            else if (pass1_colors[i] != color)
                throw Error("period colors do not stabilize in " + p.str());
        }
    }
    return p;
}

// "T/0/2" parses as a finite address; "L(0)" and "T/0(2/1)" as periodic
// points.  Symbols are [A-Za-z0-9_]+ joined by '/'.
inline Address parse_address(const std::string& text) {
    Address a;
    std::string cur;
    for (char c : text) {
        if (c == '/') {
            if (cur.empty()) throw Error("empty symbol in address: " + text);
            a.syms.push_back(cur);
            cur.clear();
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            cur += c;
        } else {
            throw Error("bad character in address: " + text);
        }
    }
    if (cur.empty()) throw Error("empty symbol in address: " + text);
    a.syms.push_back(cur);
    return a;
}

inline PeriodicAddress parse_periodic(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        throw Error("periodic address needs a (period): " + text);
    PeriodicAddress p;
    p.preperiod = parse_address(text.substr(0, open));
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    p.period = parse_address(inner).syms;
    return p;
}

namespace detail {

// Side of a prefix: the vertex currently tracked is the source or the
// target of the prefix edge.
enum class Side { Src, Tgt };

// One step of incidence tracking: the tracked side of prefix p survives
// the next symbol z iff z is incident on the matching boundary vertex of
// its rule; the new sides are where that boundary vertex sits on z.
inline std::vector<Side> side_step(const Rule& r, const Edge& z, Side s) {
    const std::string& anchor = (s == Side::Src) ? r.init : r.term;
    std::vector<Side> out;
    if (z.src == anchor) out.push_back(Side::Src);
    if (z.dst == anchor) out.push_back(Side::Tgt);
    return out;
}

}  // namespace detail

// The gluing vertex represented by p, if any.  A vertex persists along the
// tail iff its incidence chain never breaks; the chain state is (period
// phase, side), so simulating |preperiod| + two periods and then analysing
// the finite phase-transition graph decides persistence.
inline std::optional<VertexAddress> represented_vertex(const ReplacementSystem& sys,
                                                       const Graph& base,
                                                       const PeriodicAddress& raw) {
    {
        auto rep = validate_system(sys);
        if (!rep.ok()) throw Error("represented_vertex requires an expanding system");
    }
    PeriodicAddress p = normalize_periodic(sys, base, raw);
    const std::size_t k = p.period.size();

    // steady-state colors along one period (stable after the first pass)
    std::string color = address_color(sys, base, p.preperiod);
    std::vector<std::string> entry_colors(k), steady_colors(k);
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < k; ++i) {
            (pass == 0 ? entry_colors : steady_colors)[i] = color;
            color = sys.rule(color).graph.edge(p.period[i]).color;
        }

    // immortality in the steady regime: state (phase, side) reaches a cycle
    using detail::Side;
    auto node = [&](std::size_t phase, Side s) { return phase * 2 + (s == Side::Src ? 0 : 1); };
    std::vector<std::vector<std::size_t>> succ(2 * k);
    for (std::size_t phase = 0; phase < k; ++phase) {
        const Rule& r = sys.rule(steady_colors[phase]);
        const Edge& z = r.graph.edge(p.period[phase]);
        for (Side s : {Side::Src, Side::Tgt})
            for (Side t : detail::side_step(r, z, s))
                succ[node(phase, s)].push_back(node((phase + 1) % k, t));
    }
    // a node is immortal iff an infinite path leaves it; iteratively strip
    // nodes with no successors
    std::vector<char> immortal(2 * k, 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < 2 * k; ++v) {
            if (!immortal[v]) continue;
            bool any = false;
            for (auto w : succ[v])
                if (immortal[w]) any = true;
            if (!any) {
                immortal[v] = 0;
                changed = true;
            }
        }
    }

    // explicit walk over preperiod endpoints and two period passes,
    // tracking survivors and newborns
    struct Candidate {
        VertexAddress vertex;
        Side side;
    };
    auto [pre_src, pre_tgt] = endpoints(sys, base, p.preperiod);
    std::vector<Candidate> live = {{pre_src, Side::Src}, {pre_tgt, Side::Tgt}};
    Address prefix = p.preperiod;
    std::string cur_color = address_color(sys, base, p.preperiod);

    std::optional<VertexAddress> found;
    auto note_immortal = [&](const Candidate& c, std::size_t next_phase) {
        if (!immortal[node(next_phase, c.side)]) return;
        if (found && !(*found == c.vertex))
            throw Error("internal: two gluing vertices represented by " + p.str());
        if (!found) found = c.vertex;
    };

    for (std::size_t j = 0; j < 2 * k; ++j) {
        std::size_t phase = j % k;
        const Rule& r = sys.rule(cur_color);
        const Edge& z = r.graph.edge(p.period[phase]);
        std::vector<Candidate> next;
        for (const auto& c : live)
            for (Side t : detail::side_step(r, z, c.side))
                next.push_back({c.vertex, t});
        // newborn sides: interior endpoints of the fresh prefix edge
        if (r.is_interior(z.src))
            next.push_back({VertexAddress::interior(prefix, z.src), Side::Src});
        if (r.is_interior(z.dst))
            next.push_back({VertexAddress::interior(prefix, z.dst), Side::Tgt});
        // dedup by side (a side of one prefix is a single vertex)
        std::vector<Candidate> dedup;
        for (const auto& c : next) {
            bool seen = false;
            for (const auto& d : dedup)
                if (d.side == c.side) seen = true;
            if (!seen) dedup.push_back(c);
        }
        live = std::move(dedup);
        prefix = prefix.child(p.period[phase]);
        cur_color = z.color;
        if (j + 1 >= k) {
            // colors are steady from the second pass on; candidates alive
            // here are immortal iff their phase node is
            for (const auto& c : live) note_immortal(c, (j + 1) % k);
            if (found) break;
        }
    }
    return found;
}

// Two points are glued iff they are the same sequence or represent the same
// gluing vertex.
inline bool glue_equivalent(const ReplacementSystem& sys, const Graph& base,
                            const PeriodicAddress& p, const PeriodicAddress& q) {
    PeriodicAddress pn = normalize_periodic(sys, base, p);
    PeriodicAddress qn = normalize_periodic(sys, base, q);
    if (pn == qn) return true;
    auto vp = represented_vertex(sys, base, pn);
    if (!vp) return false;
    auto vq = represented_vertex(sys, base, qn);
    return vq && *vp == *vq;
}

// The boundary points of the cell C(a): one point when a realizes as a
// loop, two otherwise.
inline std::set<VertexAddress> cell_boundary(const ReplacementSystem& sys,
                                             const Graph& base, const Address& a) {
    auto [src, dst] = endpoints(sys, base, a);
    return {src, dst};
}

}  // namespace rearrange
