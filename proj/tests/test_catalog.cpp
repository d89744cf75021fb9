#include <catch2/catch_amalgamated.hpp>

#include "rearrange/catalog.hpp"

using namespace rearrange;

TEST_CASE("every catalog entry except fig-14 passes the validator") {
    for (const auto& name : catalog_names()) {
        CatalogEntry entry = catalog(name);
        auto rep = validate_system(entry.sys);
        INFO(name);
        if (name == "nonexpanding_fig14")
            CHECK(!rep.ok());
        else
            CHECK(rep.ok());
    }
}

TEST_CASE("gluing identities shipped with each entry hold") {
    for (const auto& name : catalog_names()) {
        CatalogEntry entry = catalog(name);
        for (const auto& st : entry.selftests) {
            INFO(name << ": " << st.lhs << (st.equivalent ? " ~ " : " !~ ") << st.rhs);
            PeriodicAddress p = parse_periodic(st.lhs);
            PeriodicAddress q = parse_periodic(st.rhs);
            CHECK(glue_equivalent(entry.sys, entry.sys.base, p, q) == st.equivalent);
        }
    }
}

TEST_CASE("vicsek(4) rule graph and gluing identity from the worked example") {
    CatalogEntry entry = catalog("vicsek(4)");
    const Rule& r = entry.sys.rules.at("e");
    CHECK(r.graph.edge_count() == 5);
    for (const auto& id : {"0", "1", "2", "3", "4"}) CHECK(r.graph.has_edge(id));
    CHECK(glue_equivalent(entry.sys, entry.sys.base, parse_periodic("T/0(3)"),
                          parse_periodic("T/1(3)")));
}

TEST_CASE("basilica catalog shape") {
    CatalogEntry entry = catalog("basilica");
    CHECK(entry.sys.base.edge_count() == 4);
    for (const auto& id : {"T", "B", "L", "R"}) CHECK(entry.sys.base.has_edge(id));
    const Rule& r = entry.sys.rules.at("e");
    CHECK(r.graph.edge_count() == 3);
    std::size_t interior = 0;
    for (const auto& v : r.graph.vertices)
        if (r.is_interior(v)) ++interior;
    CHECK(interior == 1);
}

TEST_CASE("airplane catalog has the two colored rules") {
    CatalogEntry entry = catalog("airplane");
    CHECK(entry.sys.colors == std::set<std::string>{"blue", "red"});
    CHECK(entry.sys.rules.count("red") == 1);
    CHECK(entry.sys.rules.count("blue") == 1);
    CHECK(entry.sys.base.edge_count() == 1);
    CHECK(entry.sys.base.edges.begin()->second.color == "blue");
}

TEST_CASE("vicsek base stars and rabbit loop roses") {
    CHECK(catalog("vicsek(3)").sys.base.edge_count() == 3);
    CHECK(catalog("vicsek(5)").sys.base.edge_count() == 5);
    CHECK(catalog("rabbit(1)").sys.base.edge_count() == 2);
    CHECK(catalog("rabbit(1)").sys.base.vertex_count() == 1);
    CHECK(catalog("rabbit(3)").sys.base.edge_count() == 4);
    CHECK(catalog("rabbit(2)").sys.rules.at("e").graph.edge_count() == 4);
}

TEST_CASE("unknown catalog names are rejected") {
    CHECK_THROWS_AS(catalog("no_such_system"), Error);
    CHECK_THROWS_AS(catalog("vicsek(2)"), Error);
    CHECK_THROWS_AS(catalog("rabbit(0)"), Error);
}

TEST_CASE("rabbit family membership conditions hold for small expansions") {
    // every vertex of an expansion has n+1 ins and n+1 outs
    for (int n : {1, 2}) {
        CatalogEntry entry = catalog("rabbit(" + std::to_string(n) + ")");
        const auto& sys = entry.sys;
        Graph g = realize(sys, sys.base, full_expansion(sys, sys.base, 1));
        for (const auto& v : g.vertices) {
            CHECK(g.in_edges(v).size() == static_cast<std::size_t>(n + 1));
            CHECK(g.out_edges(v).size() == static_cast<std::size_t>(n + 1));
        }
    }
}

TEST_CASE("vicsek family membership conditions hold for small expansions") {
    for (int n : {3, 4, 5}) {
        CatalogEntry entry = catalog("vicsek(" + std::to_string(n) + ")");
        const auto& sys = entry.sys;
        for (std::size_t depth : {std::size_t(1), std::size_t(2)}) {
            Graph g = realize(sys, sys.base, full_expansion(sys, sys.base, depth));
            CHECK(connected_components(g).size() == 1);
            CHECK(g.edge_count() + 1 == g.vertex_count());  // tree
            for (const auto& v : g.vertices) {
                auto in = g.in_edges(v).size();
                auto out = g.out_edges(v).size();
                bool source = in == 0 && out == static_cast<std::size_t>(n);
                bool sink = out == 0 && (in == 1 || in == 2);
                INFO("vicsek(" << n << ") vertex " << v);
                CHECK((source || sink));
            }
        }
    }
}

TEST_CASE("bubble bath membership conditions: cubic series-parallel graphs") {
    CatalogEntry entry = catalog("bubble_bath");
    const auto& sys = entry.sys;
    for (std::size_t depth : {std::size_t(0), std::size_t(1), std::size_t(2)}) {
        Graph g = realize(sys, sys.base, full_expansion(sys, sys.base, depth));
        CHECK(connected_components(g).size() == 1);
        for (const auto& v : g.vertices) CHECK(g.degree(v) == 3);
    }
    // the rule reversed with boundary swapped is isomorphic to the rule
    const Rule& r = sys.rules.at("e");
    Graph reversed;
    for (const auto& [id, e] : r.graph.edges) reversed.add_edge(id, e.dst, e.src, e.color);
    auto isos = isomorphisms(r.graph, reversed, {{r.init, r.term}, {r.term, r.init}});
    CHECK(!isos.empty());
}

TEST_CASE("thompson V gluing relation is trivial on sampled pairs") {
    CatalogEntry entry = catalog("thompson_v");
    const auto& sys = entry.sys;
    std::vector<std::string> pts = {"E(0)", "E(1)", "E/0(1)", "E/1(0)", "E/0/0(1)"};
    for (const auto& a : pts)
        for (const auto& b : pts) {
            bool eq = glue_equivalent(sys, sys.base, parse_periodic(a), parse_periodic(b));
            CHECK(eq == (a == b));
        }
}
