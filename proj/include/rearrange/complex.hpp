#pragma once

// The cube complex of range classes over a fixed domain base: canonical
// vertices, expansion and contraction neighbors, the partial order and its
// least upper bounds, cubes, descending links, contraction complexes, the
// graph family, and the F-infinity evidence pipeline.
//
// A vertex (KVertex) is the range equivalence class of a rearrangement with
// domain X(base): the reduced diagram's domain frontier together with the
// range graph pulled back along the edge bijection, vertices renamed by the
// least incident (address, endpoint-role) pair.  Range equivalent
// rearrangements produce structurally equal KVertex values, so class
// equality needs no isomorphism search.

#include "rearrange/diagram.hpp"
#include "rearrange/flag.hpp"

namespace rearrange {

struct KVertex {
    Graph base;
    Frontier frontier;
    Graph shape;

    bool operator==(const KVertex&) const = default;
    auto operator<=>(const KVertex&) const = default;
};

inline std::size_t rank(const KVertex& v) { return v.frontier.size(); }

namespace detail {

// Rename a shape graph's vertices canonically: each vertex is named by the
// least (frontier address, role) pair incident to it, role 0 = source.
inline Graph canonize_shape(const std::vector<Address>& frontier_sorted,
                            const Graph& interim) {
    std::map<std::string, std::string> rename;
    for (const auto& a : frontier_sorted) {
        const Edge& e = interim.edge(a.str());
        std::string src_name = a.str() + ".s";
        std::string dst_name = a.str() + ".t";
        auto offer = [&](const std::string& vertex, const std::string& name) {
            auto it = rename.find(vertex);
            if (it == rename.end() || name < it->second) rename[vertex] = name;
        };
        offer(e.src, src_name);
        offer(e.dst, dst_name);
    }
    Graph out;
    for (const auto& [id, e] : interim.edges)
        out.add_edge(id, rename.at(e.src), rename.at(e.dst), e.color);
    return out;
}

}  // namespace detail

// The range class of a rearrangement with domain X(base).
inline KVertex canonical_vertex(const ReplacementSystem& sys,
                                const Rearrangement& f) {
    KVertex v;
    v.base = f.diagram.domain_base;
    v.frontier = f.diagram.domain;
    Graph interim;
    for (const auto& a : v.frontier.addresses) {
        Address b = f.diagram.image(a);
        auto [ws, wt] = endpoints(sys, f.diagram.range_base, b);
        interim.add_edge(a.str(), ws.str(), wt.str(),
                         address_color(sys, f.diagram.domain_base, a));
    }
    v.shape = detail::canonize_shape(v.frontier.addresses, interim);
    return v;
}

inline KVertex identity_vertex(const ReplacementSystem& sys, const Graph& base) {
    return canonical_vertex(sys, identity_rearrangement(sys, base));
}

// A representative rearrangement of the class: X(base) -> X(shape), sending
// each frontier address to the shape edge of the same name.
inline Rearrangement vertex_rep(const ReplacementSystem& sys, const KVertex& v) {
    PairDiagram d;
    d.domain_base = v.base;
    d.range_base = v.shape;
    d.domain = v.frontier;
    d.range = base_frontier(v.shape);
    for (const auto& a : v.frontier.addresses)
        d.edge_map.emplace(a, Address({a.str()}));
    return Rearrangement{std::move(d)};
}

// Expansion neighbor along one frontier address: direct surgery on the
// shape (the rearrangement-level construction is cross-checked in tests).
inline KVertex expand_vertex(const ReplacementSystem& sys, const KVertex& v,
                             const Address& a) {
    if (!v.frontier.contains(a))
        throw Error("address not in frontier: " + a.str());
    KVertex w;
    w.base = v.base;
    w.frontier = expand(sys, v.base, v.frontier, a);
    const Rule& r = sys.rule(address_color(sys, v.base, a));
    Graph interim;
    const Edge& old = v.shape.edge(a.str());
    for (const auto& [id, e] : v.shape.edges)
        if (id != a.str()) interim.add_edge(id, e.src, e.dst, e.color);
    for (const auto& [zid, ze] : r.graph.edges) {
        auto resolve = [&](const std::string& rv) -> std::string {
            if (rv == r.init) return old.src;
            if (rv == r.term) return old.dst;
            return "~" + a.str() + "." + rv;
        };
        interim.add_edge(a.child(zid).str(), resolve(ze.src), resolve(ze.dst),
                         ze.color);
    }
    w.shape = detail::canonize_shape(w.frontier.addresses, interim);
    return w;
}

inline std::vector<KVertex> expansion_neighbors(const ReplacementSystem& sys,
                                                const KVertex& v) {
    std::vector<KVertex> out;
    for (const auto& a : v.frontier.addresses) out.push_back(expand_vertex(sys, v, a));
    return out;
}

// A saturated embedding of a replacement graph (or its looped quotient)
// into a target graph.
struct CharacteristicMap {
    bool looped = false;
    std::string color;
    std::map<std::string, std::string> edge_assignment;    // rule edge -> target edge
    std::map<std::string, std::string> vertex_assignment;  // rule vertex -> target vertex

    std::vector<std::string> image_edges() const {
        std::vector<std::string> ids;
        for (const auto& [re, te] : edge_assignment) ids.push_back(te);
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    bool overlaps(const CharacteristicMap& other) const {
        auto a = image_edges(), b = other.image_edges();
        std::vector<std::string> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        return !common.empty();
    }

    bool operator==(const CharacteristicMap&) const = default;
    auto operator<=>(const CharacteristicMap&) const = default;
};

namespace detail {

// The pattern searched for: the rule graph, or the rule graph with its
// boundary vertices identified.
struct Pattern {
    Graph graph;
    std::set<std::string> interior;  // vertices whose incident edges must saturate
    std::string init, term;          // original boundary names (term == init when looped)
};

inline Pattern rule_pattern(const Rule& r, bool looped) {
    Pattern p;
    p.init = r.init;
    p.term = looped ? r.init : r.term;
    for (const auto& v : r.graph.vertices) {
        std::string w = (looped && v == r.term) ? r.init : v;
        p.graph.add_vertex(w);
        if (r.is_interior(v)) p.interior.insert(v);
    }
    for (const auto& [id, e] : r.graph.edges) {
        auto m = [&](const std::string& v) {
            return (looped && v == r.term) ? r.init : v;
        };
        p.graph.add_edge(id, m(e.src), m(e.dst), e.color);
    }
    return p;
}

inline void find_embeddings(const ReplacementSystem& sys, const Graph& g,
                            const std::string& color, bool looped,
                            std::vector<CharacteristicMap>& out) {
    const Rule& rule = sys.rule(color);
    Pattern p = rule_pattern(rule, looped);
    std::vector<std::string> pedges;
    for (const auto& [id, e] : p.graph.edges) pedges.push_back(id);

    std::map<std::string, std::string> emap, vmap;
    std::set<std::string> used_edges, used_verts;

    auto assign_vertex = [&](const std::string& pv, const std::string& gv) {
        auto it = vmap.find(pv);
        if (it != vmap.end()) return it->second == gv;
        if (used_verts.count(gv)) return false;
        vmap[pv] = gv;
        used_verts.insert(gv);
        return true;
    };

    auto backtrack = [&](auto&& self, std::size_t i) -> void {
        if (i == pedges.size()) {
            // saturation: every g-edge incident on the image of an interior
            // vertex lies in the image
            for (const auto& pv : p.interior) {
                const std::string& gv = vmap.at(pv);
                for (const auto& [id, e] : g.edges)
                    if ((e.src == gv || e.dst == gv) && !used_edges.count(id))
                        return;
            }
            CharacteristicMap chi;
            chi.looped = looped;
            chi.color = color;
            chi.edge_assignment = emap;
            for (const auto& v : rule.graph.vertices) {
                std::string pv = (looped && v == rule.term) ? rule.init : v;
                chi.vertex_assignment[v] = vmap.at(pv);
            }
            out.push_back(std::move(chi));
            return;
        }
        const Edge& pe = p.graph.edge(pedges[i]);
        for (const auto& [gid, ge] : g.edges) {
            if (used_edges.count(gid) || ge.color != pe.color) continue;
            // try matching pe onto ge (directions preserved)
            auto saved_v = vmap;
            auto saved_uv = used_verts;
            if (assign_vertex(pe.src, ge.src) && assign_vertex(pe.dst, ge.dst)) {
                emap[pedges[i]] = gid;
                used_edges.insert(gid);
                self(self, i + 1);
                emap.erase(pedges[i]);
                used_edges.erase(gid);
            }
            vmap = saved_v;
            used_verts = saved_uv;
        }
    };
    backtrack(backtrack, 0);
}

}  // namespace detail

// All characteristic maps of every color's replacement graph (and looped
// quotient) into g, in deterministic order.
inline std::vector<CharacteristicMap> characteristic_maps(
    const ReplacementSystem& sys, const Graph& g) {
    std::vector<CharacteristicMap> out;
    for (const auto& [color, rule] : sys.rules) {
        detail::find_embeddings(sys, g, color, false, out);
        detail::find_embeddings(sys, g, color, true, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Distinct collapsible subgraphs: images of the characteristic maps.
inline std::vector<std::vector<std::string>> collapsible_subgraphs(
    const ReplacementSystem& sys, const Graph& g) {
    std::set<std::vector<std::string>> images;
    for (const auto& chi : characteristic_maps(sys, g)) images.insert(chi.image_edges());
    return {images.begin(), images.end()};
}

namespace detail {

inline bool is_characteristic_into(const ReplacementSystem& sys, const Graph& g,
                                   const CharacteristicMap& chi) {
    auto maps = characteristic_maps(sys, g);
    return std::find(maps.begin(), maps.end(), chi) != maps.end();
}

}  // namespace detail

// The simple contraction morphism X(g) -> X(g') determined by a
// characteristic map: remove the collapsible subgraph, insert one edge.
inline Rearrangement contraction_morphism(const ReplacementSystem& sys,
                                          const Graph& g,
                                          const CharacteristicMap& chi) {
    if (!detail::is_characteristic_into(sys, g, chi))
        throw Error("invalid characteristic map");
    const Rule& rule = sys.rule(chi.color);
    std::set<std::string> image;
    for (const auto& [re, te] : chi.edge_assignment) image.insert(te);
    std::set<std::string> interior_images;
    for (const auto& v : rule.graph.vertices)
        if (rule.is_interior(v)) interior_images.insert(chi.vertex_assignment.at(v));

    std::string fresh = "_c0";
    while (g.has_edge(fresh)) fresh += "0";
    Graph contracted;
    for (const auto& v : g.vertices)
        if (!interior_images.count(v)) contracted.add_vertex(v);
    for (const auto& [id, e] : g.edges)
        if (!image.count(id)) contracted.add_edge(id, e.src, e.dst, e.color);
    contracted.add_edge(fresh, chi.vertex_assignment.at(rule.init),
                        chi.vertex_assignment.at(rule.term), chi.color);

    PairDiagram d;
    d.domain_base = g;
    d.range_base = contracted;
    d.domain = base_frontier(g);
    d.range = expand(sys, contracted, base_frontier(contracted), Address({fresh}));
    for (const auto& [id, e] : g.edges)
        if (!image.count(id)) d.edge_map.emplace(Address({id}), Address({id}));
    for (const auto& [re, te] : chi.edge_assignment)
        d.edge_map.emplace(Address({te}), Address({fresh, re}));
    return Rearrangement{make_diagram(sys, std::move(d))};
}

// The down-neighbor of a KVertex along a characteristic map of its shape.
inline KVertex contract(const ReplacementSystem& sys, const KVertex& v,
                        const CharacteristicMap& chi) {
    Rearrangement c = contraction_morphism(sys, v.shape, chi);
    KVertex w = canonical_vertex(sys, compose(sys, vertex_rep(sys, v), c));
    const Rule& rule = sys.rule(chi.color);
    if (rank(w) + rule.graph.edge_count() != rank(v) + 1)
        throw Error("internal: contraction changed rank incorrectly");
    return w;
}

inline std::vector<KVertex> contraction_neighbors(const ReplacementSystem& sys,
                                                  const KVertex& v) {
    std::vector<KVertex> out;
    for (const auto& chi : characteristic_maps(sys, v.shape))
        out.push_back(contract(sys, v, chi));
    return out;
}

// [f] precedes [g] iff g ∘ f^{-1} is an expansion morphism, i.e. the
// reduced diagram of that composite has the whole range base as its range
// frontier.
inline bool is_expansion_morphism(const Rearrangement& h) {
    for (const auto& a : h.diagram.range.addresses)
        if (a.size() != 1) return false;
    return true;
}

inline bool precedes(const ReplacementSystem& sys, const Rearrangement& f,
                     const Rearrangement& g) {
    if (!(f.diagram.domain_base == g.diagram.domain_base))
        throw Error("not-comparable-bases");
    return is_expansion_morphism(compose(sys, invert(f), g));
}

// Least upper bound of [f] and [g]: the canonical expansion of f's codomain
// given by the reduced diagram of g ∘ f^{-1}, pushed back to a vertex over
// the common domain.
inline KVertex least_upper_bound(const ReplacementSystem& sys,
                                 const Rearrangement& f, const Rearrangement& g) {
    if (!(f.diagram.domain_base == g.diagram.domain_base))
        throw Error("not-comparable-bases");
    Rearrangement h = compose(sys, invert(f), g);
    Rearrangement x = canonical_expansion(sys, f.diagram.range_base, h.diagram.domain);
    return canonical_vertex(sys, compose(sys, f, x));
}

// cube(v, S): the 2^|S| classes obtained by expanding each subset of S.
inline std::set<KVertex> cube(const ReplacementSystem& sys, const KVertex& v,
                              const std::vector<Address>& s) {
    if (s.size() > 20) throw Error("size cap exceeded: cube dimension > 20");
    for (const auto& a : s)
        if (!v.frontier.contains(a))
            throw Error("cube set member not in frontier: " + a.str());
    std::set<KVertex> out;
    std::size_t subsets = std::size_t(1) << s.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        KVertex w = v;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (mask & (std::size_t(1) << i)) w = expand_vertex(sys, w, s[i]);
        out.insert(std::move(w));
    }
    return out;
}

// Contraction complex Con(g): one vertex per characteristic map, edges
// between maps with edge-disjoint images.
inline FlagComplex contraction_complex(const ReplacementSystem& sys, const Graph& g) {
    auto maps = characteristic_maps(sys, g);
    FlagComplex x = FlagComplex::on(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        std::string label = maps[i].color + (maps[i].looped ? "+loop@" : "@");
        for (const auto& e : maps[i].image_edges()) label += e + ",";
        x.labels[i] = label;
    }
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j)
            if (!maps[i].overlaps(maps[j])) x.connect(i, j);
    return x;
}

// Descending link of a vertex, built through the cube structure: two
// down-moves span a square iff some common lower vertex expands back
// through both with the original vertex as the apex.  This is deliberately
// a different code path from contraction_complex; the two are cross-checked
// in the tests.
inline FlagComplex descending_link(const ReplacementSystem& sys, const KVertex& v) {
    auto maps = characteristic_maps(sys, v.shape);
    std::vector<KVertex> down;
    down.reserve(maps.size());
    for (const auto& chi : maps) down.push_back(contract(sys, v, chi));

    std::vector<std::map<std::string, KVertex>> below(maps.size());
    auto key = [](const KVertex& u) {
        std::string s;
        for (const auto& a : u.frontier.addresses) s += a.str() + "|";
        return s + u.shape.dump();
    };
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (const auto& chi : characteristic_maps(sys, down[i].shape)) {
            KVertex u = contract(sys, down[i], chi);
            below[i].emplace(key(u), std::move(u));
        }

    FlagComplex x = FlagComplex::on(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        std::string label = maps[i].color + (maps[i].looped ? "+loop@" : "@");
        for (const auto& e : maps[i].image_edges()) label += e + ",";
        x.labels[i] = label;
    }
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
            bool square = false;
            for (const auto& [k, u] : below[i]) {
                if (square) break;
                if (!below[j].count(k)) continue;
                // find the two expansion directions and close the square
                std::optional<Address> ai, aj;
                for (const auto& a : u.frontier.addresses) {
                    KVertex e = expand_vertex(sys, u, a);
                    if (e == down[i]) ai = a;
                    if (e == down[j]) aj = a;
                }
                if (ai && aj && !(*ai == *aj) &&
                    expand_vertex(sys, expand_vertex(sys, u, *ai), *aj) == v)
                    square = true;
            }
            if (square) x.connect(i, j);
        }
    return x;
}

// ---------------------------------------------------------------------------
// Graph-level moves and the graph family

inline Graph graph_expand(const ReplacementSystem& sys, const Graph& g,
                          const std::string& edge_id) {
    const Edge& e = g.edge(edge_id);
    const Rule& r = sys.rule(e.color);
    Graph out;
    for (const auto& v : g.vertices) out.add_vertex(v);
    for (const auto& [id, ge] : g.edges)
        if (id != edge_id) out.add_edge(id, ge.src, ge.dst, ge.color);
    auto resolve = [&](const std::string& rv) {
        if (rv == r.init) return e.src;
        if (rv == r.term) return e.dst;
        return edge_id + "~" + rv;
    };
    for (const auto& [zid, ze] : r.graph.edges)
        out.add_edge(edge_id + "~" + zid, resolve(ze.src), resolve(ze.dst), ze.color);
    return out;
}

inline Graph graph_contract(const ReplacementSystem& sys, const Graph& g,
                            const CharacteristicMap& chi) {
    const Rule& rule = sys.rule(chi.color);
    std::set<std::string> image;
    for (const auto& [re, te] : chi.edge_assignment) image.insert(te);
    std::set<std::string> interior_images;
    for (const auto& v : rule.graph.vertices)
        if (rule.is_interior(v)) interior_images.insert(chi.vertex_assignment.at(v));
    std::string fresh = "_c0";
    while (g.has_edge(fresh)) fresh += "0";
    Graph out;
    for (const auto& v : g.vertices)
        if (!interior_images.count(v)) out.add_vertex(v);
    for (const auto& [id, e] : g.edges)
        if (!image.count(id)) out.add_edge(id, e.src, e.dst, e.color);
    out.add_edge(fresh, chi.vertex_assignment.at(rule.init),
                 chi.vertex_assignment.at(rule.term), chi.color);
    return out;
}

// Canonical forms of all isomorphism classes in the graph family with at
// most max_edges edges: closure of the base graph under single expansions
// and contractions, explored through graphs at most one rule larger.
inline std::vector<Graph> enumerate_family(const ReplacementSystem& sys,
                                           std::size_t max_edges) {
    std::size_t max_rule = 0;
    for (const auto& [c, r] : sys.rules)
        max_rule = std::max(max_rule, r.graph.edge_count());
    std::size_t explore_cap = max_edges + (max_rule - 1);
    if (explore_cap > max_cells_cap())
        throw Error("size cap exceeded in enumerate_family");

    std::map<std::string, Graph> seen;  // canonical encoding -> canonical graph
    std::vector<Graph> queue;
    Graph start = canonical_form(sys.base);
    seen.emplace(canonical_encoding(start), start);
    queue.push_back(start);
    while (!queue.empty()) {
        Graph g = queue.back();
        queue.pop_back();
        std::vector<Graph> moves;
        if (g.edge_count() <= explore_cap)
            for (const auto& [id, e] : g.edges) {
                const Rule& r = sys.rule(e.color);
                if (g.edge_count() - 1 + r.graph.edge_count() <= explore_cap)
                    moves.push_back(graph_expand(sys, g, id));
            }
        for (const auto& chi : characteristic_maps(sys, g))
            moves.push_back(graph_contract(sys, g, chi));
        for (const auto& m : moves) {
            Graph c = canonical_form(m);
            std::string enc = canonical_encoding(c);
            if (seen.emplace(enc, c).second) queue.push_back(std::move(c));
        }
    }
    std::vector<Graph> members;
    for (const auto& [enc, g] : seen)
        if (g.edge_count() <= max_edges) members.push_back(g);
    std::sort(members.begin(), members.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return canonical_encoding(a) < canonical_encoding(b);
    });
    return members;
}

// Largest number of other collapsible subgraphs any collapsible subgraph
// shares an edge with, over all input graphs.
inline std::size_t max_overlap(const ReplacementSystem& sys,
                               const std::vector<Graph>& graphs) {
    std::size_t worst = 0;
    for (const auto& g : graphs) {
        auto subs = collapsible_subgraphs(sys, g);
        for (std::size_t i = 0; i < subs.size(); ++i) {
            std::size_t count = 0;
            for (std::size_t j = 0; j < subs.size(); ++j) {
                if (i == j) continue;
                std::vector<std::string> common;
                std::set_intersection(subs[i].begin(), subs[i].end(),
                                      subs[j].begin(), subs[j].end(),
                                      std::back_inserter(common));
                if (!common.empty()) ++count;
            }
            worst = std::max(worst, count);
        }
    }
    return worst;
}

// The tree T_G of a Vicsek-family graph: one vertex per source, an edge
// between sources at distance two.
inline Graph source_tree(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() != 1 || g.edge_count() + 1 != g.vertex_count())
        throw Error("shape-violation: not a tree");
    std::set<std::string> sources, sinks;
    for (const auto& v : g.vertices) {
        bool has_in = !g.in_edges(v).empty();
        bool has_out = !g.out_edges(v).empty();
        if (has_in && has_out)
            throw Error("shape-violation: vertex " + v + " is neither source nor sink");
        (has_out ? sources : sinks).insert(v);
    }
    Graph t;
    for (const auto& s : sources) t.add_vertex(s);
    int k = 0;
    for (auto it = sources.begin(); it != sources.end(); ++it)
        for (auto jt = std::next(it); jt != sources.end(); ++jt) {
            bool share = false;
            for (const auto& [id, e] : g.edges) {
                if (e.src != *it) continue;
                for (const auto& [id2, e2] : g.edges)
                    if (e2.src == *jt && e2.dst == e.dst) share = true;
            }
            if (share) t.add_edge("t" + std::to_string(k++), *it, *jt, "t");
        }
    return t;
}

// ---------------------------------------------------------------------------
// Finite branching and the F-infinity evidence report

// Degree evolution under full expansion is linear: an incident (color,
// direction) slot turns into the slots of the matching boundary vertex of
// that color's rule.  Finite branching iff every starting vertex profile
// has a bounded orbit.
struct BranchingVerdict {
    bool finite = false;
    bool by_degree_one_boundary = false;  // the fast sufficient condition
};

namespace detail {

using DegreeProfile = std::map<std::pair<std::string, int>, long long>;  // (color, 0=in/1=out)

inline DegreeProfile transfer(const ReplacementSystem& sys, const DegreeProfile& p) {
    DegreeProfile out;
    for (const auto& [slot, count] : p) {
        const auto& [color, dir] = slot;
        const Rule& r = sys.rule(color);
        const std::string& anchor = dir == 0 ? r.term : r.init;
        for (const auto& [id, e] : r.graph.edges) {
            if (e.dst == anchor) out[{e.color, 0}] += count;
            if (e.src == anchor) out[{e.color, 1}] += count;
        }
    }
    return out;
}

inline bool bounded_orbit(const ReplacementSystem& sys, DegreeProfile p) {
    std::set<std::string> seen;
    auto encode = [](const DegreeProfile& q) {
        std::string s;
        for (const auto& [slot, c] : q)
            s += slot.first + (slot.second ? "+" : "-") + std::to_string(c) + ";";
        return s;
    };
    for (int step = 0; step < 64; ++step) {
        if (!seen.insert(encode(p)).second) return true;
        for (const auto& [slot, c] : p)
            if (c > (1LL << 40)) return false;
        p = transfer(sys, p);
    }
    return false;
}

}  // namespace detail

inline BranchingVerdict finite_branching(const ReplacementSystem& sys) {
    BranchingVerdict v;
    v.by_degree_one_boundary = true;
    for (const auto& [c, r] : sys.rules)
        if (r.graph.degree(r.init) != 1 || r.graph.degree(r.term) != 1)
            v.by_degree_one_boundary = false;
    if (v.by_degree_one_boundary) {
        v.finite = true;
        return v;
    }
    std::vector<detail::DegreeProfile> starts;
    auto profile_of = [](const Graph& g, const std::string& vx) {
        detail::DegreeProfile p;
        for (const auto& [id, e] : g.edges) {
            if (e.dst == vx) ++p[{e.color, 0}];
            if (e.src == vx) ++p[{e.color, 1}];
        }
        return p;
    };
    for (const auto& vx : sys.base.vertices) starts.push_back(profile_of(sys.base, vx));
    for (const auto& [c, r] : sys.rules)
        for (const auto& vx : r.graph.vertices)
            if (r.is_interior(vx)) starts.push_back(profile_of(r.graph, vx));
    v.finite = true;
    for (auto& p : starts)
        if (!detail::bounded_orbit(sys, p)) v.finite = false;
    return v;
}

struct ClassRecord {
    Graph graph;                  // canonical form
    std::size_t edges = 0;
    std::size_t collapsible = 0;  // distinct images
    std::size_t maps = 0;         // characteristic maps
};

struct FinftyReport {
    std::size_t max_edges = 0;
    std::size_t m = 0;
    std::vector<ClassRecord> records;
    std::vector<std::size_t> exceptions;  // indices into records with < m subgraphs
    BranchingVerdict branching;
    std::size_t overlap_bound = 0;
};

inline FinftyReport finfty_evidence(const ReplacementSystem& sys,
                                    std::size_t max_edges, std::size_t m) {
    FinftyReport rep;
    rep.max_edges = max_edges;
    rep.m = m;
    rep.branching = finite_branching(sys);
    auto family = enumerate_family(sys, max_edges);
    for (const auto& g : family) {
        ClassRecord rec;
        rec.graph = g;
        rec.edges = g.edge_count();
        rec.collapsible = collapsible_subgraphs(sys, g).size();
        rec.maps = characteristic_maps(sys, g).size();
        rep.records.push_back(std::move(rec));
    }
    for (std::size_t i = 0; i < rep.records.size(); ++i)
        if (rep.records[i].collapsible < m) rep.exceptions.push_back(i);
    rep.overlap_bound = max_overlap(sys, family);
    return rep;
}

}  // namespace rearrange
