#pragma once

// Test-only brute-force oracles, independent of the library's search
// machinery: plain enumeration over all vertex bijections.

#include <random>

#include "rearrange/graph.hpp"

namespace oracle {

using rearrange::Edge;
using rearrange::Graph;

// Count isomorphisms g -> h by trying every vertex bijection and every
// matching of parallel-edge classes.  Exponential; keep graphs tiny.
inline std::size_t count_isomorphisms(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return 0;
    std::vector<std::string> gv(g.vertices.begin(), g.vertices.end());
    std::vector<std::string> hv(h.vertices.begin(), h.vertices.end());
    std::sort(hv.begin(), hv.end());
    std::size_t count = 0;
    do {
        std::map<std::string, std::string> vm;
        for (std::size_t i = 0; i < gv.size(); ++i) vm[gv[i]] = hv[i];
        // group edges by mapped (src,dst,color); multiplicities must agree
        std::map<std::string, std::size_t> a, b;
        for (const auto& [id, e] : g.edges)
            ++a[vm.at(e.src) + '>' + vm.at(e.dst) + '|' + e.color];
        for (const auto& [id, e] : h.edges) ++b[e.src + '>' + e.dst + '|' + e.color];
        if (a == b) {
            std::size_t ways = 1;
            for (const auto& [key, mult] : a) {
                std::size_t f = 1;
                for (std::size_t i = 2; i <= mult; ++i) f *= i;
                ways *= f;
            }
            count += ways;
        }
    } while (std::next_permutation(hv.begin(), hv.end()));
    return count;
}

inline Graph shuffle_labels(const Graph& g, std::mt19937& rng) {
    std::vector<std::string> vs(g.vertices.begin(), g.vertices.end());
    std::vector<std::string> perm = vs;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<std::string, std::string> vm;
    for (std::size_t i = 0; i < vs.size(); ++i) vm[vs[i]] = "w" + perm[i];
    Graph out;
    for (const auto& v : vs) out.add_vertex(vm.at(v));
    std::vector<std::string> eids;
    for (const auto& [id, e] : g.edges) eids.push_back(id);
    std::shuffle(eids.begin(), eids.end(), rng);
    int k = 0;
    for (const auto& id : eids) {
        const Edge& e = g.edge(id);
        out.add_edge("f" + std::to_string(k++), vm.at(e.src), vm.at(e.dst), e.color);
    }
    return out;
}

inline std::vector<Graph> random_graph_corpus(std::size_t n, std::size_t max_edges,
                                              unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    std::vector<std::string> colors = {"e", "f"};
    for (std::size_t i = 0; i < n; ++i) {
        Graph g;
        std::uniform_int_distribution<std::size_t> nv(1, 5), ne(1, max_edges),
            pick_color(0, 1);
        std::size_t vn = nv(rng);
        for (std::size_t v = 0; v < vn; ++v) g.add_vertex("v" + std::to_string(v));
        std::uniform_int_distribution<std::size_t> pv(0, vn - 1);
        std::size_t en = ne(rng);
        for (std::size_t e = 0; e < en; ++e)
            g.add_edge("e" + std::to_string(e), "v" + std::to_string(pv(rng)),
                       "v" + std::to_string(pv(rng)), colors[pick_color(rng)]);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace oracle
