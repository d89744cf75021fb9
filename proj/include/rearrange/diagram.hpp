#pragma once

// Rearrangements as graph pair diagrams: validation, the unique reduction,
// groupoid composition and inversion, the action on eventually periodic
// symbol points, element orders, and the Thompson-F transfer generators.
//
// A rearrangement between limit spaces X(G) -> X(G') over a common set of
// replacement rules is a pair of frontiers plus a color-preserving edge
// bijection inducing a graph isomorphism of the realizations.  Composition
// is written left to right: compose(f, g) applies f first.  The source
// material writes composition the other way around, so its product
// "f2 f1" is compose(f1, f2) here.

#include "rearrange/periodic.hpp"

namespace rearrange {

struct PairDiagram {
    Graph domain_base;
    Graph range_base;
    Frontier domain;
    Frontier range;
    std::map<Address, Address> edge_map;

    Address image(const Address& a) const {
        auto it = edge_map.find(a);
        if (it == edge_map.end())
            throw Error("address not in diagram domain: " + a.str());
        return it->second;
    }

    Address preimage(const Address& b) const {
        for (const auto& [a, bb] : edge_map)
            if (bb == b) return a;
        throw Error("address not in diagram range: " + b.str());
    }

    bool operator==(const PairDiagram&) const = default;
    auto operator<=>(const PairDiagram&) const = default;
};

// Validates the frontier properties, bijectivity, color preservation and the
// induced-vertex-map isomorphism condition.
inline PairDiagram make_diagram(const ReplacementSystem& sys, PairDiagram d) {
    if (!valid_frontier(sys, d.domain_base, d.domain))
        throw Error("not-a-frontier: domain side");
    if (!valid_frontier(sys, d.range_base, d.range))
        throw Error("not-a-frontier: range side");
    if (d.edge_map.size() != d.domain.size())
        throw Error("not-bijective: map does not cover the domain frontier");
    std::set<Address> image;
    for (const auto& [a, b] : d.edge_map) {
        if (!d.domain.contains(a))
            throw Error("not-bijective: " + a.str() + " is not a domain address");
        if (!d.range.contains(b))
            throw Error("not-bijective: " + b.str() + " is not a range address");
        if (!image.insert(b).second)
            throw Error("not-bijective: " + b.str() + " hit twice");
        if (address_color(sys, d.domain_base, a) !=
            address_color(sys, d.range_base, b))
            throw Error("color-mismatch: " + a.str() + " -> " + b.str());
    }
    if (image.size() != d.range.size())
        throw Error("not-bijective: range frontier not covered");

    // induced vertex map: sources to sources, targets to targets,
    // consistently and injectively
    std::map<VertexAddress, VertexAddress> vmap;
    auto bind = [&](const VertexAddress& u, const VertexAddress& w,
                    const Address& a) {
        auto it = vmap.find(u);
        if (it == vmap.end())
            vmap.emplace(u, w);
        else if (!(it->second == w))
            throw Error("vertex-map-ill-defined at " + a.str() + ": vertex " +
                        u.str() + " needs two images");
    };
    for (const auto& [a, b] : d.edge_map) {
        auto [us, ut] = endpoints(sys, d.domain_base, a);
        auto [ws, wt] = endpoints(sys, d.range_base, b);
        bind(us, ws, a);
        bind(ut, wt, a);
    }
    std::set<VertexAddress> hit;
    for (const auto& [u, w] : vmap)
        if (!hit.insert(w).second)
            throw Error("vertex-map-ill-defined: not injective at " + w.str());
    std::size_t range_vertices = realize(sys, d.range_base, d.range).vertex_count();
    if (hit.size() != range_vertices)
        throw Error("vertex-map-ill-defined: not surjective");
    return d;
}

// A rearrangement is a reduced diagram; reduced diagrams are unique per
// rearrangement, so structural equality decides element equality.
struct Rearrangement {
    PairDiagram diagram;

    bool operator==(const Rearrangement&) const = default;
    auto operator<=>(const Rearrangement&) const = default;
};

// Repeatedly collapse sibling families on which the map is a suffix copy.
inline Rearrangement reduce(const ReplacementSystem& sys, PairDiagram d) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<Address> parents;
        for (const auto& a : d.domain.addresses)
            if (a.size() >= 2) parents.insert(a.parent());
        for (const auto& p : parents) {
            std::string pcolor = address_color(sys, d.domain_base, p);
            const Rule& r = sys.rule(pcolor);
            // all children present and mapped as q.child(z) for a fixed q
            std::optional<Address> q;
            bool collapsible = true;
            for (const auto& [zid, ze] : r.graph.edges) {
                Address child = p.child(zid);
                auto it = d.edge_map.find(child);
                if (it == d.edge_map.end() || it->second.size() < 2 ||
                    it->second.back() != zid) {
                    collapsible = false;
                    break;
                }
                Address qq = it->second.parent();
                if (!q)
                    q = qq;
                else if (!(*q == qq)) {
                    collapsible = false;
                    break;
                }
            }
            if (!collapsible || !q) continue;
            if (address_color(sys, d.range_base, *q) != pcolor) continue;
            for (const auto& [zid, ze] : r.graph.edges) {
                Address child = p.child(zid);
                d.edge_map.erase(child);
                std::erase(d.domain.addresses, child);
                std::erase(d.range.addresses, q->child(zid));
            }
            d.domain.addresses.push_back(p);
            d.range.addresses.push_back(*q);
            std::sort(d.domain.addresses.begin(), d.domain.addresses.end());
            std::sort(d.range.addresses.begin(), d.range.addresses.end());
            d.edge_map.emplace(p, *q);
            changed = true;
            break;
        }
    }
    return Rearrangement{std::move(d)};
}

inline Rearrangement identity_rearrangement(const ReplacementSystem& sys,
                                            const Graph& base) {
    PairDiagram d;
    d.domain_base = base;
    d.range_base = base;
    d.domain = base_frontier(base);
    d.range = d.domain;
    for (const auto& a : d.domain.addresses) d.edge_map.emplace(a, a);
    return Rearrangement{std::move(d)};
}

inline bool is_identity(const Rearrangement& f) {
    if (!(f.diagram.domain_base == f.diagram.range_base)) return false;
    for (const auto& [a, b] : f.diagram.edge_map)
        if (!(a == b) || a.size() != 1) return false;
    return f.diagram.domain == f.diagram.range;
}

// The base isomorphism determined by a graph isomorphism.
inline Rearrangement base_isomorphism(const ReplacementSystem& sys, const Graph& g,
                                      const Graph& h, const GraphMap& iso) {
    PairDiagram d;
    d.domain_base = g;
    d.range_base = h;
    d.domain = base_frontier(g);
    d.range = base_frontier(h);
    for (const auto& a : d.domain.addresses)
        d.edge_map.emplace(a, Address({iso.edge_map.at(a.syms[0])}));
    return Rearrangement{make_diagram(sys, std::move(d))};
}

// The canonical expansion morphism X(base) -> X(realize(F)): every frontier
// address becomes a base edge of the realized graph.
inline Rearrangement canonical_expansion(const ReplacementSystem& sys,
                                         const Graph& base, const Frontier& f) {
    PairDiagram d;
    d.domain_base = base;
    d.range_base = realize(sys, base, f);
    d.domain = f;
    d.range = base_frontier(d.range_base);
    for (const auto& a : f.addresses)
        d.edge_map.emplace(a, Address({a.str()}));
    return Rearrangement{std::move(d)};
}

inline Rearrangement invert(const Rearrangement& f) {
    PairDiagram d;
    d.domain_base = f.diagram.range_base;
    d.range_base = f.diagram.domain_base;
    d.domain = f.diagram.range;
    d.range = f.diagram.domain;
    for (const auto& [a, b] : f.diagram.edge_map) d.edge_map.emplace(b, a);
    return Rearrangement{std::move(d)};
}

// compose(f, g): f first, then g; defined when f's range base is g's domain
// base (the same graph, same identifiers).
inline Rearrangement compose(const ReplacementSystem& sys, const Rearrangement& f,
                             const Rearrangement& g) {
    if (!(f.diagram.range_base == g.diagram.domain_base))
        throw Error("not-composable: range base differs from domain base");
    Frontier mid = refine(f.diagram.range, g.diagram.domain);
    PairDiagram d;
    d.domain_base = f.diagram.domain_base;
    d.range_base = g.diagram.range_base;
    for (const auto& x : mid.addresses) {
        auto f2 = f.diagram.range.member_prefixing(x.syms);
        auto g1 = g.diagram.domain.member_prefixing(x.syms);
        if (!f2 || !g1) throw Error("internal: refinement not covered");
        Address a = f.diagram.preimage(*f2).extend(x.suffix_after(*f2));
        Address c = g.diagram.image(*g1).extend(x.suffix_after(*g1));
        d.domain.addresses.push_back(a);
        d.range.addresses.push_back(c);
        d.edge_map.emplace(a, c);
    }
    std::sort(d.domain.addresses.begin(), d.domain.addresses.end());
    std::sort(d.range.addresses.begin(), d.range.addresses.end());
    return reduce(sys, std::move(d));
}

// The action on an eventually periodic point: expose the frontier prefix,
// substitute its image, renormalize.
inline PeriodicAddress apply(const ReplacementSystem& sys, const Rearrangement& f,
                             const PeriodicAddress& p) {
    PeriodicAddress pn = normalize_periodic(sys, f.diagram.domain_base, p);
    std::size_t depth = 0;
    for (const auto& a : f.diagram.domain.addresses)
        depth = std::max(depth, a.size());
    auto word = pn.unroll(depth + pn.period.size());
    auto a = f.diagram.domain.member_prefixing(word);
    if (!a) throw Error("point does not lie over the domain frontier");
    Address b = f.diagram.image(*a);
    PeriodicAddress out;
    out.preperiod = b;
    if (a->size() < pn.preperiod.size()) {
        auto rest = pn.preperiod.suffix_after(*a);
        out.preperiod = b.extend(rest);
        out.period = pn.period;
    } else {
        std::size_t shift = (a->size() - pn.preperiod.size()) % pn.period.size();
        out.period.assign(pn.period.begin() + static_cast<long>(shift), pn.period.end());
        out.period.insert(out.period.end(), pn.period.begin(),
                          pn.period.begin() + static_cast<long>(shift));
    }
    return normalize_periodic(sys, f.diagram.range_base, out);
}

// Least k <= bound with f^k the identity, for group elements.
inline std::optional<std::size_t> element_order(const ReplacementSystem& sys,
                                                const Rearrangement& f,
                                                std::size_t bound = 10000) {
    if (!(f.diagram.domain_base == f.diagram.range_base))
        throw Error("element_order needs a group element");
    Rearrangement power = f;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (is_identity(power)) return k;
        power = compose(sys, power, f);
    }
    return std::nullopt;
}

// The generator r_e of the embedded Thompson's group F supported on the
// cell of e.  Requires the rule for e's color to have a degree-one source
// as initial vertex and a degree-one sink as terminal vertex.
inline Rearrangement transfer_generator(const ReplacementSystem& sys,
                                        const Graph& base, const Frontier& f,
                                        const Address& e) {
    if (!f.contains(e)) throw Error("address not in frontier: " + e.str());
    const Rule& r = sys.rule(address_color(sys, base, e));
    auto out_i = r.graph.out_edges(r.init);
    auto in_i = r.graph.in_edges(r.init);
    auto out_t = r.graph.out_edges(r.term);
    auto in_t = r.graph.in_edges(r.term);
    if (out_i.size() != 1 || !in_i.empty())
        throw Error("hypothesis-violated: initial vertex " + r.init +
                    " is not a source of degree one");
    if (in_t.size() != 1 || !out_t.empty())
        throw Error("hypothesis-violated: terminal vertex " + r.term +
                    " is not a sink of degree one");
    std::string iota = out_i[0];
    std::string tau = in_t[0];

    PairDiagram d;
    d.domain_base = base;
    d.range_base = base;
    d.domain = expand(sys, base, expand(sys, base, f, e), e.child(iota));
    d.range = expand(sys, base, expand(sys, base, f, e), e.child(tau));
    for (const auto& a : f.addresses)
        if (!(a == e)) d.edge_map.emplace(a, a);
    d.edge_map.emplace(e.child(iota).child(iota), e.child(iota));
    d.edge_map.emplace(e.child(iota).child(tau), e.child(tau).child(iota));
    d.edge_map.emplace(e.child(tau), e.child(tau).child(tau));
    for (const auto& [zid, ze] : r.graph.edges) {
        if (zid == iota || zid == tau) continue;
        d.edge_map.emplace(e.child(iota).child(zid), e.child(zid));
        d.edge_map.emplace(e.child(zid), e.child(tau).child(zid));
    }
    return reduce(sys, make_diagram(sys, std::move(d)));
}

}  // namespace rearrange
