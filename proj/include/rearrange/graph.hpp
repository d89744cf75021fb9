#pragma once

// Finite directed multigraphs with colored edges, plus the isomorphism and
// canonical-form machinery everything else is built on.  Graphs here are
// tiny (at most a few hundred edges), so all searches are plain
// backtracking with signature pruning.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rearrange {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
    std::string id;
    std::string src;
    std::string dst;
    std::string color;

    bool is_loop() const { return src == dst; }
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// Vertices and edges are opaque string tokens ordered lexicographically;
// every container is sorted so that identical graphs print identically.
struct Graph {
    std::set<std::string> vertices;
    std::map<std::string, Edge> edges;  // keyed by edge id

    void add_vertex(const std::string& v) { vertices.insert(v); }

    void add_edge(const std::string& id, const std::string& src,
                  const std::string& dst, const std::string& color) {
        if (edges.count(id))
            throw Error("duplicate edge id: " + id);
        vertices.insert(src);
        vertices.insert(dst);
        edges.emplace(id, Edge{id, src, dst, color});
    }

    const Edge& edge(const std::string& id) const {
        auto it = edges.find(id);
        if (it == edges.end())
            throw Error("no such edge: " + id);
        return it->second;
    }

    bool has_edge(const std::string& id) const { return edges.count(id) > 0; }
    bool has_vertex(const std::string& v) const { return vertices.count(v) > 0; }

    std::size_t edge_count() const { return edges.size(); }
    std::size_t vertex_count() const { return vertices.size(); }

    std::vector<std::string> out_edges(const std::string& v) const {
        std::vector<std::string> out;
        for (const auto& [id, e] : edges)
            if (e.src == v) out.push_back(id);
        return out;
    }

    std::vector<std::string> in_edges(const std::string& v) const {
        std::vector<std::string> in;
        for (const auto& [id, e] : edges)
            if (e.dst == v) in.push_back(id);
        return in;
    }

    // Loops contribute two to the total degree.
    std::size_t degree(const std::string& v) const {
        std::size_t d = 0;
        for (const auto& [id, e] : edges) {
            if (e.src == v) ++d;
            if (e.dst == v) ++d;
        }
        return d;
    }

    std::vector<std::string> incident_edges(const std::string& v) const {
        std::vector<std::string> inc;
        for (const auto& [id, e] : edges)
            if (e.src == v || e.dst == v) inc.push_back(id);
        return inc;
    }

    bool adjacent(const std::string& u, const std::string& v) const {
        for (const auto& [id, e] : edges)
            if ((e.src == u && e.dst == v) || (e.src == v && e.dst == u))
                return true;
        return false;
    }

    bool operator==(const Graph&) const = default;
    auto operator<=>(const Graph&) const = default;

    std::string dump() const {
        std::ostringstream os;
        os << "V{";
        for (const auto& v : vertices) os << ' ' << v;
        os << " } E{";
        for (const auto& [id, e] : edges)
            os << ' ' << id << ':' << e.src << "->" << e.dst << '[' << e.color << ']';
        os << " }";
        return os.str();
    }
};

// Structure- and color-preserving assignment of one graph's vertices and
// edges to another's.
struct GraphMap {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;

    bool operator==(const GraphMap&) const = default;
    auto operator<=>(const GraphMap&) const = default;
};

namespace detail {

// Signature of a vertex: (in-degree, out-degree, sorted multiset of incident
// edge colors with orientation and loop marks).  Cheap and sufficient
// pruning at this scale.
inline std::string vertex_signature(const Graph& g, const std::string& v) {
    std::size_t in = 0, out = 0;
    std::vector<std::string> marks;
    for (const auto& [id, e] : g.edges) {
        if (e.src == v && e.dst == v) {
            marks.push_back("l:" + e.color);
            ++in;
            ++out;
        } else if (e.src == v) {
            marks.push_back("o:" + e.color);
            ++out;
        } else if (e.dst == v) {
            marks.push_back("i:" + e.color);
            ++in;
        }
    }
    std::sort(marks.begin(), marks.end());
    std::ostringstream os;
    os << in << ',' << out;
    for (const auto& m : marks) os << ';' << m;
    return os.str();
}

// Two rounds of neighborhood refinement on top of the local signature.
inline std::map<std::string, std::string> refined_signatures(const Graph& g) {
    std::map<std::string, std::string> sig;
    for (const auto& v : g.vertices) sig[v] = vertex_signature(g, v);
    for (int round = 0; round < 2; ++round) {
        std::map<std::string, std::string> next;
        for (const auto& v : g.vertices) {
            std::vector<std::string> nbr;
            for (const auto& [id, e] : g.edges) {
                if (e.src == v) nbr.push_back("o" + e.color + '|' + sig.at(e.dst));
                if (e.dst == v) nbr.push_back("i" + e.color + '|' + sig.at(e.src));
            }
            std::sort(nbr.begin(), nbr.end());
            std::string s = sig.at(v) + '#';
            for (const auto& n : nbr) s += n + '&';
            next[v] = s;
        }
        sig = next;
    }
    return sig;
}

// Enumerate all bijections between two same-sized multisets of parallel
// edges; used to fan a vertex bijection out to full edge bijections.
inline void edge_class_bijections(
    const std::vector<std::string>& from, const std::vector<std::string>& to,
    std::vector<std::map<std::string, std::string>>& result) {
    std::vector<std::size_t> perm(to.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<std::map<std::string, std::string>> acc;
    do {
        std::map<std::string, std::string> m;
        for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[perm[i]];
        acc.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (result.empty()) {
        result = std::move(acc);
        return;
    }
    std::vector<std::map<std::string, std::string>> merged;
    for (const auto& a : result)
        for (const auto& b : acc) {
            auto m = a;
            m.insert(b.begin(), b.end());
            merged.push_back(std::move(m));
        }
    result = std::move(merged);
}

}  // namespace detail

// All isomorphisms g -> h extending the pinned partial vertex assignment,
// in the order given by the induced edge-id sequence over g's sorted edges.
// Automorphism groups are obtained with h = g.  Parallel edges of equal
// color are interchangeable, so one vertex bijection can carry several edge
// bijections; each is reported separately.
inline std::vector<GraphMap> isomorphisms(
    const Graph& g, const Graph& h,
    const std::map<std::string, std::string>& pinned = {}) {
    std::vector<GraphMap> result;
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return result;

    auto gsig = detail::refined_signatures(g);
    auto hsig = detail::refined_signatures(h);
    {
        std::vector<std::string> gs, hs;
        for (const auto& [v, s] : gsig) gs.push_back(s);
        for (const auto& [v, s] : hsig) hs.push_back(s);
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs) return result;
    }

    std::vector<std::string> gverts(g.vertices.begin(), g.vertices.end());
    std::map<std::string, std::string> vmap(pinned);
    std::set<std::string> used;
    for (const auto& [a, b] : pinned) {
        if (!g.has_vertex(a) || !h.has_vertex(b))
            throw Error("pinned assignment names unknown vertex");
        used.insert(b);
    }

    // Adjacency consistency of a partial vertex map: every edge whose
    // endpoints are both assigned must have a matching partner, with
    // multiplicities.
    auto consistent = [&]() {
        std::map<std::string, int> need;
        for (const auto& [id, e] : g.edges) {
            auto si = vmap.find(e.src);
            auto ti = vmap.find(e.dst);
            if (si == vmap.end() || ti == vmap.end()) continue;
            ++need[si->second + '>' + ti->second + '|' + e.color];
        }
        std::map<std::string, int> have;
        std::set<std::string> image;
        for (const auto& [a, b] : vmap) image.insert(b);
        for (const auto& [id, e] : h.edges) {
            if (!image.count(e.src) || !image.count(e.dst)) continue;
            ++have[e.src + '>' + e.dst + '|' + e.color];
        }
        return need == have;
    };

    std::vector<std::map<std::string, std::string>> vertex_isos;
    auto backtrack = [&](auto&& self, std::size_t i) -> void {
        while (i < gverts.size() && vmap.count(gverts[i])) ++i;
        if (i == gverts.size()) {
            if (consistent()) vertex_isos.push_back(vmap);
            return;
        }
        const auto& v = gverts[i];
        for (const auto& w : h.vertices) {
            if (used.count(w) || hsig.at(w) != gsig.at(v)) continue;
            vmap[v] = w;
            used.insert(w);
            if (consistent()) self(self, i + 1);
            vmap.erase(v);
            used.erase(w);
        }
    };
    if (consistent()) backtrack(backtrack, 0);

    for (const auto& vm : vertex_isos) {
        // Group g's edges by (mapped src, mapped dst, color) and match them
        // against h's edges in that class.
        std::map<std::string, std::vector<std::string>> gclass, hclass;
        for (const auto& [id, e] : g.edges)
            gclass[vm.at(e.src) + '>' + vm.at(e.dst) + '|' + e.color].push_back(id);
        for (const auto& [id, e] : h.edges)
            hclass[e.src + '>' + e.dst + '|' + e.color].push_back(id);
        if (gclass.size() != hclass.size()) continue;
        std::vector<std::map<std::string, std::string>> emaps;
        bool ok = true;
        for (const auto& [key, from] : gclass) {
            auto it = hclass.find(key);
            if (it == hclass.end() || it->second.size() != from.size()) {
                ok = false;
                break;
            }
            detail::edge_class_bijections(from, it->second, emaps);
        }
        if (!ok) continue;
        for (auto& em : emaps) result.push_back(GraphMap{vm, std::move(em)});
    }

    std::sort(result.begin(), result.end(),
              [&](const GraphMap& a, const GraphMap& b) {
                  for (const auto& [id, e] : g.edges) {
                      const auto& x = a.edge_map.at(id);
                      const auto& y = b.edge_map.at(id);
                      if (x != y) return x < y;
                  }
                  return false;
              });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

inline std::vector<GraphMap> automorphisms(const Graph& g) {
    return isomorphisms(g, g);
}

namespace detail {

// One adjacency encoding of g under a fixed vertex ordering: the sorted
// list of (src index, dst index, color) triples.
inline std::string encode_under_order(const Graph& g,
                                      const std::map<std::string, int>& order) {
    std::vector<std::string> rows;
    for (const auto& [id, e] : g.edges) {
        std::ostringstream os;
        os << order.at(e.src) << '>' << order.at(e.dst) << '|' << e.color;
        rows.push_back(os.str());
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    os << g.vertex_count() << '/';
    for (const auto& r : rows) os << r << ';';
    return os.str();
}

}  // namespace detail

// The lexicographically least adjacency encoding over all vertex orderings
// compatible with the refined signature classes.  Orderings are explored by
// backtracking: at each step every remaining vertex of the least-signature
// class is tried.  Returns the encoding string; see canonical_form for the
// rebuilt graph.
inline std::string canonical_encoding(const Graph& g) {
    if (g.vertices.empty()) return "0/";
    auto sig = detail::refined_signatures(g);
    std::vector<std::string> verts(g.vertices.begin(), g.vertices.end());
    std::stable_sort(verts.begin(), verts.end(),
                     [&](const std::string& a, const std::string& b) {
                         return sig.at(a) < sig.at(b);
                     });

    std::string best;
    std::map<std::string, int> order;
    std::set<std::string> placed;

    auto backtrack = [&](auto&& self, std::size_t depth) -> void {
        if (depth == verts.size()) {
            std::string enc = detail::encode_under_order(g, order);
            if (best.empty() || enc < best) best = enc;
            return;
        }
        // candidates: all unplaced vertices sharing the least signature
        // among unplaced ones
        std::string least;
        for (const auto& v : verts)
            if (!placed.count(v) && (least.empty() || sig.at(v) < least))
                least = sig.at(v);
        for (const auto& v : verts) {
            if (placed.count(v) || sig.at(v) != least) continue;
            order[v] = static_cast<int>(depth);
            placed.insert(v);
            self(self, depth + 1);
            placed.erase(v);
            order.erase(v);
        }
    };
    backtrack(backtrack, 0);
    return best;
}

// Isomorphism-invariant renaming: vertices become v0..vn-1 in canonical
// order, edges e0..em-1 in encoding order.  canonical_form(g) ==
// canonical_form(h) iff g and h are isomorphic (directions and colors
// respected), and the map is idempotent.
inline Graph canonical_form(const Graph& g) {
    if (g.vertices.empty()) return Graph{};
    auto sig = detail::refined_signatures(g);
    std::vector<std::string> verts(g.vertices.begin(), g.vertices.end());
    std::stable_sort(verts.begin(), verts.end(),
                     [&](const std::string& a, const std::string& b) {
                         return sig.at(a) < sig.at(b);
                     });

    std::string best;
    std::map<std::string, int> best_order;
    std::map<std::string, int> order;
    std::set<std::string> placed;
    auto backtrack = [&](auto&& self, std::size_t depth) -> void {
        if (depth == verts.size()) {
            std::string enc = detail::encode_under_order(g, order);
            if (best.empty() || enc < best) {
                best = enc;
                best_order = order;
            }
            return;
        }
        std::string least;
        for (const auto& v : verts)
            if (!placed.count(v) && (least.empty() || sig.at(v) < least))
                least = sig.at(v);
        for (const auto& v : verts) {
            if (placed.count(v) || sig.at(v) != least) continue;
            order[v] = static_cast<int>(depth);
            placed.insert(v);
            self(self, depth + 1);
            placed.erase(v);
            order.erase(v);
        }
    };
    backtrack(backtrack, 0);

    Graph out;
    std::vector<std::string> names(g.vertex_count());
    for (const auto& [v, i] : best_order) names[i] = "v" + std::to_string(i);
    for (const auto& n : names) out.add_vertex(n);
    // sort edges by encoded triple, then assign ids e0.. in that order
    std::vector<std::pair<std::string, const Edge*>> rows;
    for (const auto& [id, e] : g.edges) {
        std::ostringstream os;
        os.width(6);
        os.fill('0');
        os << best_order.at(e.src);
        os << '>';
        os.width(6);
        os.fill('0');
        os << best_order.at(e.dst);
        os << '|' << e.color << '|' << id;
        rows.emplace_back(os.str(), &e);
    }
    std::sort(rows.begin(), rows.end());
    int k = 0;
    for (const auto& [key, e] : rows) {
        out.add_edge("e" + std::to_string(k++),
                     "v" + std::to_string(best_order.at(e->src)),
                     "v" + std::to_string(best_order.at(e->dst)), e->color);
    }
    return out;
}

// Partition of the vertices by undirected reachability, each part sorted,
// parts ordered by their least vertex.
inline std::vector<std::set<std::string>> connected_components(const Graph& g) {
    std::map<std::string, std::string> parent;
    for (const auto& v : g.vertices) parent[v] = v;
    auto find = [&](std::string v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    for (const auto& [id, e] : g.edges) {
        auto a = find(e.src), b = find(e.dst);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::string, std::set<std::string>> comps;
    for (const auto& v : g.vertices) comps[find(v)].insert(v);
    std::vector<std::set<std::string>> out;
    for (auto& [root, part] : comps) out.push_back(std::move(part));
    return out;
}

}  // namespace rearrange
