#pragma once

// Replacement systems (monochromatic systems are one-color systems), edge
// addresses, frontiers, and the realization of a frontier as a graph.  All
// values are immutable once built; operations are pure.

#include <cstdlib>
#include <numeric>

#include "rearrange/graph.hpp"

namespace rearrange {

struct Rule {
    Graph graph;
    std::string init;
    std::string term;

    bool is_interior(const std::string& v) const {
        return v != init && v != term;
    }
};

struct ReplacementSystem {
    std::set<std::string> colors;
    Graph base;
    std::map<std::string, Rule> rules;

    const Rule& rule(const std::string& color) const {
        auto it = rules.find(color);
        if (it == rules.end())
            throw Error("no rule for color: " + color);
        return it->second;
    }
};

// Size caps guard the exponential operations.  REARRANGE_MAX_CELLS
// overrides the default frontier cap.
inline std::size_t max_cells_cap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("REARRANGE_MAX_CELLS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return cap;
}

// An edge address: base edge followed by rule edges, each valid for the
// color of its predecessor.
struct Address {
    std::vector<std::string> syms;

    Address() = default;
    explicit Address(std::vector<std::string> s) : syms(std::move(s)) {}
    Address(std::initializer_list<std::string> s) : syms(s) {}

    std::size_t size() const { return syms.size(); }
    bool empty() const { return syms.empty(); }
    const std::string& back() const { return syms.back(); }

    Address child(const std::string& sym) const {
        Address a(*this);
        a.syms.push_back(sym);
        return a;
    }

    Address parent() const {
        if (syms.size() < 2) throw Error("address has no parent: " + str());
        Address a(*this);
        a.syms.pop_back();
        return a;
    }

    bool is_prefix_of(const Address& other) const {
        if (syms.size() > other.syms.size()) return false;
        return std::equal(syms.begin(), syms.end(), other.syms.begin());
    }

    bool is_proper_prefix_of(const Address& other) const {
        return syms.size() < other.syms.size() && is_prefix_of(other);
    }

    // Suffix after removing the given prefix.
    std::vector<std::string> suffix_after(const Address& prefix) const {
        if (!prefix.is_prefix_of(*this))
            throw Error("not a prefix: " + prefix.str() + " of " + str());
        return {syms.begin() + static_cast<long>(prefix.size()), syms.end()};
    }

    Address extend(const std::vector<std::string>& suffix) const {
        Address a(*this);
        a.syms.insert(a.syms.end(), suffix.begin(), suffix.end());
        return a;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < syms.size(); ++i) {
            if (i) s += '/';
            s += syms[i];
        }
        return s;
    }

    bool operator==(const Address&) const = default;
    auto operator<=>(const Address&) const = default;
};

// Color of the cell the address names: the color of its last edge symbol.
inline std::string address_color(const ReplacementSystem& sys, const Graph& base,
                                 const Address& a) {
    if (a.empty()) throw Error("empty address");
    std::string color = base.edge(a.syms[0]).color;
    for (std::size_t i = 1; i < a.size(); ++i)
        color = sys.rule(color).graph.edge(a.syms[i]).color;
    return color;
}

inline bool valid_address(const ReplacementSystem& sys, const Graph& base,
                          const Address& a) {
    if (a.empty() || !base.has_edge(a.syms[0])) return false;
    std::string color = base.edge(a.syms[0]).color;
    for (std::size_t i = 1; i < a.size(); ++i) {
        auto it = sys.rules.find(color);
        if (it == sys.rules.end() || !it->second.graph.has_edge(a.syms[i]))
            return false;
        color = it->second.graph.edge(a.syms[i]).color;
    }
    return true;
}

// A boundary point of a cell: either a base vertex or an interior rule
// vertex hanging off an address prefix.
struct VertexAddress {
    bool base_vertex = true;
    std::string vertex;  // base vertex id, or interior vertex id of the rule
    Address prefix;      // empty when base_vertex

    static VertexAddress base(const std::string& v) {
        return VertexAddress{true, v, {}};
    }
    static VertexAddress interior(const Address& prefix, const std::string& v) {
        return VertexAddress{false, v, prefix};
    }

    std::string str() const {
        if (base_vertex) return vertex;
        return prefix.str() + "." + vertex;
    }

    bool operator==(const VertexAddress&) const = default;
    auto operator<=>(const VertexAddress&) const = default;
};

// Recursive endpoint evaluation: boundary vertices of the rule attach to the
// endpoints of the replaced edge, interior vertices become new points.
inline std::pair<VertexAddress, VertexAddress> endpoints(
    const ReplacementSystem& sys, const Graph& base, const Address& a) {
    if (!valid_address(sys, base, a))
        throw Error("malformed address: " + a.str());
    const Edge& e0 = base.edge(a.syms[0]);
    VertexAddress src = VertexAddress::base(e0.src);
    VertexAddress dst = VertexAddress::base(e0.dst);
    std::string color = e0.color;
    Address prefix({a.syms[0]});
    for (std::size_t i = 1; i < a.size(); ++i) {
        const Rule& r = sys.rule(color);
        const Edge& z = r.graph.edge(a.syms[i]);
        auto resolve = [&](const std::string& v) -> VertexAddress {
            if (v == r.init) return src;
            if (v == r.term) return dst;
            return VertexAddress::interior(prefix, v);
        };
        VertexAddress nsrc = resolve(z.src);
        VertexAddress ndst = resolve(z.dst);
        src = nsrc;
        dst = ndst;
        color = z.color;
        prefix = prefix.child(a.syms[i]);
    }
    return {src, dst};
}

// A frontier: the leaf set of a finite rooted expansion tree over a base
// graph, stored as a sorted complete prefix code.
struct Frontier {
    std::vector<Address> addresses;  // sorted, unique

    std::size_t size() const { return addresses.size(); }
    bool contains(const Address& a) const {
        return std::binary_search(addresses.begin(), addresses.end(), a);
    }

    // The unique member that prefixes the given (long enough) word.
    std::optional<Address> member_prefixing(const std::vector<std::string>& word) const {
        for (const auto& a : addresses) {
            if (a.size() > word.size()) continue;
            if (std::equal(a.syms.begin(), a.syms.end(), word.begin())) return a;
        }
        return std::nullopt;
    }

    bool operator==(const Frontier&) const = default;
    auto operator<=>(const Frontier&) const = default;
};

inline Frontier base_frontier(const Graph& base) {
    Frontier f;
    for (const auto& [id, e] : base.edges) f.addresses.push_back(Address({id}));
    std::sort(f.addresses.begin(), f.addresses.end());
    return f;
}

// Frontier validity: a sorted set of valid addresses forming a complete
// prefix code — it must be the leaf set of an expansion tree.
inline bool valid_frontier(const ReplacementSystem& sys, const Graph& base,
                           const Frontier& f) {
    if (f.addresses.empty()) return false;
    for (const auto& a : f.addresses)
        if (!valid_address(sys, base, a)) return false;
    if (!std::is_sorted(f.addresses.begin(), f.addresses.end())) return false;
    for (std::size_t i = 0; i + 1 < f.addresses.size(); ++i) {
        if (f.addresses[i] == f.addresses[i + 1]) return false;
        if (f.addresses[i].is_prefix_of(f.addresses[i + 1])) return false;
    }
    // completeness: walking down from every base edge, each internal tree
    // node must have all rule children present
    auto covered = [&](auto&& self, const Address& node) -> bool {
        if (f.contains(node)) return true;
        // node must be internal: all children of its color's rule covered
        std::string color = address_color(sys, base, node);
        auto it = sys.rules.find(color);
        if (it == sys.rules.end()) return false;
        bool any = false;
        for (const auto& [id, e] : it->second.graph.edges) {
            if (!self(self, node.child(id))) return false;
            any = true;
        }
        return any;
    };
    for (const auto& [id, e] : base.edges)
        if (!covered(covered, Address({id}))) return false;
    return true;
}

// Replace one frontier address by its children under the rule for its color.
inline Frontier expand(const ReplacementSystem& sys, const Graph& base,
                       const Frontier& f, const Address& a) {
    if (!f.contains(a))
        throw Error("address not in frontier: " + a.str());
    std::string color = address_color(sys, base, a);
    const Rule& r = sys.rule(color);
    Frontier out;
    out.addresses.reserve(f.size() - 1 + r.graph.edge_count());
    for (const auto& x : f.addresses)
        if (!(x == a)) out.addresses.push_back(x);
    for (const auto& [id, e] : r.graph.edges) out.addresses.push_back(a.child(id));
    std::sort(out.addresses.begin(), out.addresses.end());
    if (out.size() > max_cells_cap())
        throw Error("size cap exceeded (" + std::to_string(out.size()) + " cells)");
    return out;
}

// n rounds of replacing every frontier address.
inline Frontier full_expansion(const ReplacementSystem& sys, const Graph& base,
                               std::size_t n) {
    Frontier f = base_frontier(base);
    for (std::size_t round = 0; round < n; ++round) {
        Frontier next;
        std::size_t total = 0;
        for (const auto& a : f.addresses) {
            const Rule& r = sys.rule(address_color(sys, base, a));
            total += r.graph.edge_count();
            if (total > max_cells_cap())
                throw Error("size cap exceeded in full_expansion");
            for (const auto& [id, e] : r.graph.edges)
                next.addresses.push_back(a.child(id));
        }
        std::sort(next.addresses.begin(), next.addresses.end());
        f = std::move(next);
    }
    return f;
}

// Coarsest common refinement: members of the union that are not proper
// prefixes of other members.
inline Frontier refine(const Frontier& f1, const Frontier& f2) {
    std::vector<Address> all(f1.addresses);
    all.insert(all.end(), f2.addresses.begin(), f2.addresses.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Frontier out;
    for (const auto& a : all) {
        bool is_prefix = false;
        for (const auto& b : all)
            if (a.is_proper_prefix_of(b)) {
                is_prefix = true;
                break;
            }
        if (!is_prefix) out.addresses.push_back(a);
    }
    return out;
}

// The graph of an expansion: edges are exactly the frontier's addresses,
// vertices the VertexAddress values reached by endpoints.
inline Graph realize(const ReplacementSystem& sys, const Graph& base,
                     const Frontier& f) {
    Graph g;
    for (const auto& a : f.addresses) {
        auto [src, dst] = endpoints(sys, base, a);
        g.add_edge(a.str(), src.str(), dst.str(), address_color(sys, base, a));
    }
    return g;
}

struct Violation {
    int condition;        // 1..3 per the expanding condition; 0 structural
    std::string where;    // "base" or "rule <color>"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// The expanding condition: (1) no isolated vertices anywhere, (2) the
// boundary vertices of each replacement graph are not connected by an edge,
// (3) each replacement graph has at least three vertices and two edges.
// Structural defects (missing rules, bad boundary vertices) are reported as
// condition 0.
inline ValidationReport validate_system(const ReplacementSystem& sys) {
    ValidationReport rep;
    auto structural = [&](const std::string& where, const std::string& msg) {
        rep.violations.push_back({0, where, msg});
    };

    std::set<std::string> used_colors;
    for (const auto& [id, e] : sys.base.edges) used_colors.insert(e.color);
    for (const auto& [c, r] : sys.rules)
        for (const auto& [id, e] : r.graph.edges) used_colors.insert(e.color);
    for (const auto& c : used_colors)
        if (!sys.rules.count(c))
            structural("rule " + c, "color has no replacement rule");
    for (const auto& c : used_colors)
        if (!sys.colors.count(c))
            structural("system", "color " + c + " not declared");

    for (const auto& v : sys.base.vertices)
        if (sys.base.degree(v) == 0)
            rep.violations.push_back({1, "base", "isolated vertex " + v});

    for (const auto& [c, r] : sys.rules) {
        std::string where = "rule " + c;
        if (!r.graph.has_vertex(r.init) || !r.graph.has_vertex(r.term)) {
            structural(where, "boundary vertex missing from rule graph");
            continue;
        }
        if (r.init == r.term) {
            structural(where, "initial and terminal vertices coincide");
            continue;
        }
        for (const auto& v : r.graph.vertices)
            if (r.graph.degree(v) == 0)
                rep.violations.push_back({1, where, "isolated vertex " + v});
        if (r.graph.adjacent(r.init, r.term))
            rep.violations.push_back(
                {2, where, "initial and terminal vertices are connected by an edge"});
        if (r.graph.vertex_count() < 3)
            rep.violations.push_back({3, where, "fewer than three vertices"});
        if (r.graph.edge_count() < 2)
            rep.violations.push_back({3, where, "fewer than two edges"});
    }
    return rep;
}

}  // namespace rearrange
