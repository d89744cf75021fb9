#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rearrange/catalog.hpp"
#include "rearrange/system.hpp"

using namespace rearrange;

namespace {
const ReplacementSystem& basilica() {
    static ReplacementSystem sys = catalog("basilica").sys;
    return sys;
}
const ReplacementSystem& thompson_f() {
    static ReplacementSystem sys = catalog("thompson_f").sys;
    return sys;
}
}  // namespace

TEST_CASE("expanding-condition validator on the basilica") {
    CHECK(validate_system(basilica()).ok());
}

TEST_CASE("validator flags the fig-14 system on condition 2") {
    auto rep = validate_system(catalog("nonexpanding_fig14").sys);
    REQUIRE(!rep.ok());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].condition == 2);
}

TEST_CASE("validator flags a single-edge rule on conditions 2 and 3") {
    ReplacementSystem sys;
    sys.colors = {"e"};
    sys.base.add_edge("E", "a", "b", "e");
    Rule r;
    r.init = "i";
    r.term = "t";
    r.graph.add_edge("0", "i", "t", "e");
    sys.rules["e"] = r;
    auto rep = validate_system(sys);
    std::set<int> conds;
    for (const auto& v : rep.violations) conds.insert(v.condition);
    CHECK(conds == std::set<int>{2, 3});
}

TEST_CASE("expanding a basilica frontier at T") {
    const auto& sys = basilica();
    Frontier f = base_frontier(sys.base);
    Frontier g = expand(sys, sys.base, f, Address({"T"}));
    std::vector<std::string> got;
    for (const auto& a : g.addresses) got.push_back(a.str());
    CHECK(got == std::vector<std::string>{"B", "L", "R", "T/0", "T/1", "T/2"});
    CHECK(valid_frontier(sys, sys.base, g));
    CHECK_THROWS_AS(expand(sys, sys.base, g, Address({"T"})), Error);
}

TEST_CASE("expansion order is irrelevant") {
    const auto& sys = basilica();
    Frontier f = base_frontier(sys.base);
    Frontier a = expand(sys, sys.base, expand(sys, sys.base, f, Address({"T"})),
                        Address({"B"}));
    Frontier b = expand(sys, sys.base, expand(sys, sys.base, f, Address({"B"})),
                        Address({"T"}));
    CHECK(a == b);
    Frontier c = expand(sys, sys.base, a, Address({"T", "0"}));
    Frontier d = expand(sys, sys.base,
                        expand(sys, sys.base, expand(sys, sys.base, f, Address({"T"})),
                               Address({"T", "0"})),
                        Address({"B"}));
    CHECK(c == d);
}

TEST_CASE("thompson-F base expansion") {
    const auto& sys = thompson_f();
    Frontier f = expand(sys, sys.base, base_frontier(sys.base), Address({"E"}));
    std::vector<std::string> got;
    for (const auto& a : f.addresses) got.push_back(a.str());
    CHECK(got == std::vector<std::string>{"E/0", "E/1"});
}

TEST_CASE("full expansion sizes") {
    const auto& sys = thompson_f();
    CHECK(full_expansion(sys, sys.base, 0).size() == 1);
    CHECK(full_expansion(sys, sys.base, 3).size() == 8);
    // basilica: 4 * 3^2
    CHECK(full_expansion(basilica(), basilica().base, 2).size() == 36);
}

TEST_CASE("frontier cardinality grows by rule size minus one") {
    const auto& sys = basilica();
    Frontier f = base_frontier(sys.base);
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
        Address a = f.addresses[pick(rng)];
        Frontier g = expand(sys, sys.base, f, a);
        CHECK(g.size() == f.size() + 2);
        f = g;
    }
    CHECK(valid_frontier(sys, sys.base, f));
}

TEST_CASE("full expansion equals expanding every address, any order") {
    const auto& sys = basilica();
    Frontier full = full_expansion(sys, sys.base, 2);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Frontier f = base_frontier(sys.base);
        for (int round = 0; round < 2; ++round) {
            std::vector<Address> todo = f.addresses;
            std::shuffle(todo.begin(), todo.end(), rng);
            for (const auto& a : todo) f = expand(sys, sys.base, f, a);
        }
        CHECK(f == full);
    }
}

TEST_CASE("basilica endpoints by hand recursion") {
    const auto& sys = basilica();
    auto [s1, t1] = endpoints(sys, sys.base, Address({"T", "1"}));
    CHECK(s1 == VertexAddress::interior(Address({"T"}), "v"));
    CHECK(t1 == s1);

    auto [s2, t2] = endpoints(sys, sys.base, Address({"L", "0"}));
    CHECK(s2 == VertexAddress::base("l"));
    CHECK(t2 == VertexAddress::interior(Address({"L"}), "v"));

    auto [s3, t3] = endpoints(sys, sys.base, Address({"T"}));
    CHECK(s3 == VertexAddress::base("r"));
    CHECK(t3 == VertexAddress::base("l"));
}

TEST_CASE("realize the base frontier reproduces the base graph shape") {
    const auto& sys = basilica();
    Graph r = realize(sys, sys.base, base_frontier(sys.base));
    CHECK(canonical_form(r) == canonical_form(sys.base));
}

TEST_CASE("thompson-F realizations are directed paths") {
    const auto& sys = thompson_f();
    Graph g = realize(sys, sys.base, full_expansion(sys, sys.base, 2));
    CHECK(g.edge_count() == 4);
    CHECK(g.vertex_count() == 5);
    std::size_t sources = 0, sinks = 0;
    for (const auto& v : g.vertices) {
        if (g.in_edges(v).empty()) ++sources;
        if (g.out_edges(v).empty()) ++sinks;
        CHECK(g.degree(v) <= 2);
    }
    CHECK(sources == 1);
    CHECK(sinks == 1);
}

TEST_CASE("basilica simple expansion realizes with three vertices") {
    const auto& sys = basilica();
    Frontier f = expand(sys, sys.base, base_frontier(sys.base), Address({"T"}));
    Graph g = realize(sys, sys.base, f);
    CHECK(g.edge_count() == 6);
    CHECK(g.vertex_count() == 3);
}

TEST_CASE("refine") {
    const auto& sys = thompson_f();
    Frontier f1 = expand(sys, sys.base, base_frontier(sys.base), Address({"E"}));
    CHECK(refine(f1, f1) == f1);
    CHECK(refine(f1, base_frontier(sys.base)) == f1);
    Frontier f2 = expand(sys, sys.base, f1, Address({"E", "0"}));
    Frontier r = refine(f1, f2);
    CHECK(r == f2);
    for (const auto& a : r.addresses) {
        bool pref1 = false, pref2 = false;
        for (const auto& b : f1.addresses) pref1 |= b.is_prefix_of(a);
        for (const auto& b : f2.addresses) pref2 |= b.is_prefix_of(a);
        CHECK((pref1 && pref2));
    }
}

TEST_CASE("endpoints agree with realizations of finer frontiers") {
    const auto& sys = basilica();
    Frontier f = expand(sys, sys.base, base_frontier(sys.base), Address({"B"}));
    Graph coarse = realize(sys, sys.base, f);
    Frontier g = expand(sys, sys.base, f, Address({"B", "1"}));
    Graph fine = realize(sys, sys.base, g);
    // old vertices keep their names in the finer realization
    for (const auto& v : coarse.vertices) CHECK(fine.has_vertex(v));
}

TEST_CASE("size cap guards expansion") {
    const auto& sys = thompson_f();
    CHECK_THROWS_AS(full_expansion(sys, sys.base, 25), Error);
}
