#include <catch2/catch_amalgamated.hpp>

#include "rearrange/graph.hpp"
#include "oracles.hpp"

using namespace rearrange;

namespace {

Graph single_edge() {
    Graph g;
    g.add_edge("e", "a", "b", "c");
    return g;
}

Graph basilica_base() {
    Graph g;
    g.add_edge("L", "l", "l", "e");
    g.add_edge("R", "r", "r", "e");
    g.add_edge("T", "r", "l", "e");
    g.add_edge("B", "l", "r", "e");
    return g;
}

Graph vicsek_base() {
    Graph g;
    g.add_edge("T", "c", "pT", "e");
    g.add_edge("L", "c", "pL", "e");
    g.add_edge("R", "c", "pR", "e");
    g.add_edge("B", "c", "pB", "e");
    return g;
}

}  // namespace

TEST_CASE("single directed edge has exactly the identity automorphism") {
    auto autos = automorphisms(single_edge());
    REQUIRE(autos.size() == 1);
    CHECK(autos[0].vertex_map.at("a") == "a");
    CHECK(autos[0].edge_map.at("e") == "e");
}

TEST_CASE("basilica base graph has two automorphisms") {
    Graph g = basilica_base();
    auto autos = automorphisms(g);
    // oracle: exhaustive search over all vertex bijections and edge matchings
    CHECK(oracle::count_isomorphisms(g, g) == 2);
    REQUIRE(autos.size() == 2);
    bool found_swap = false;
    for (const auto& a : autos)
        if (a.vertex_map.at("l") == "r" && a.edge_map.at("L") == "R" &&
            a.edge_map.at("T") == "B")
            found_swap = true;
    CHECK(found_swap);
}

TEST_CASE("vicsek base star has 24 automorphisms") {
    Graph g = vicsek_base();
    CHECK(oracle::count_isomorphisms(g, g) == 24);
    CHECK(automorphisms(g).size() == 24);
}

TEST_CASE("parallel edges multiply automorphisms") {
    Graph g;
    g.add_edge("A", "u", "u", "e");
    g.add_edge("B", "u", "u", "e");
    CHECK(automorphisms(g).size() == 2);
}

TEST_CASE("isomorphisms respect pinning") {
    Graph g = basilica_base();
    auto pinned = isomorphisms(g, g, {{"l", "r"}});
    REQUIRE(pinned.size() == 1);
    CHECK(pinned[0].edge_map.at("L") == "R");
}

TEST_CASE("canonical form identifies relabelings of a 3-cycle") {
    Graph g, h;
    g.add_edge("x", "1", "2", "c");
    g.add_edge("y", "2", "3", "c");
    g.add_edge("z", "3", "1", "c");
    h.add_edge("p", "beta", "gamma", "c");
    h.add_edge("q", "gamma", "alpha", "c");
    h.add_edge("r", "alpha", "beta", "c");
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_form(canonical_form(g)) == canonical_form(g));
}

TEST_CASE("canonical form respects the basilica swap symmetry") {
    Graph g = basilica_base();
    Graph h;
    h.add_edge("L", "r", "r", "e");
    h.add_edge("R", "l", "l", "e");
    h.add_edge("T", "l", "r", "e");
    h.add_edge("B", "r", "l", "e");
    CHECK(canonical_form(g) == canonical_form(h));
}

TEST_CASE("canonical form distinguishes path orientations") {
    Graph g, h;
    g.add_edge("x", "a", "b", "c");
    g.add_edge("y", "b", "c", "c");
    h.add_edge("x", "a", "b", "c");
    h.add_edge("y", "c", "b", "c");
    CHECK(!(canonical_form(g) == canonical_form(h)));
}

TEST_CASE("isomorphic iff equal canonical forms, on a random corpus") {
    auto corpus = oracle::random_graph_corpus(40, 8, 1234);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j) {
            bool iso = !isomorphisms(corpus[i], corpus[j]).empty();
            bool canon = canonical_form(corpus[i]) == canonical_form(corpus[j]);
            INFO(corpus[i].dump() << " vs " << corpus[j].dump());
            CHECK(iso == canon);
        }
}

TEST_CASE("canonical form is invariant under relabeling") {
    auto corpus = oracle::random_graph_corpus(25, 7, 99);
    std::mt19937 rng(7);
    for (const auto& g : corpus) {
        Graph h = oracle::shuffle_labels(g, rng);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("automorphisms form a group under composition") {
    for (const Graph& g : {basilica_base(), vicsek_base()}) {
        auto autos = automorphisms(g);
        // closure and identity
        bool has_id = false;
        for (const auto& a : autos) {
            bool id = true;
            for (const auto& [v, w] : a.vertex_map)
                if (v != w) id = false;
            for (const auto& [e, f] : a.edge_map)
                if (e != f) id = false;
            if (id) has_id = true;
        }
        CHECK(has_id);
        auto composed_in = [&](const GraphMap& a, const GraphMap& b) {
            GraphMap c;
            for (const auto& [v, w] : a.vertex_map) c.vertex_map[v] = b.vertex_map.at(w);
            for (const auto& [e, f] : a.edge_map) c.edge_map[e] = b.edge_map.at(f);
            return std::find(autos.begin(), autos.end(), c) != autos.end();
        };
        for (const auto& a : autos)
            for (const auto& b : autos) CHECK(composed_in(a, b));
    }
}

TEST_CASE("connected components") {
    Graph g = single_edge();
    CHECK(connected_components(g).size() == 1);

    Graph two;
    two.add_edge("A", "u", "u", "e");
    two.add_edge("B", "w", "w", "e");
    CHECK(connected_components(two).size() == 2);

    Graph basilica_rule;
    basilica_rule.add_edge("0", "i", "v", "e");
    basilica_rule.add_edge("1", "v", "v", "e");
    basilica_rule.add_edge("2", "v", "t", "e");
    CHECK(connected_components(basilica_rule).size() == 1);
}
