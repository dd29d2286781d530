#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hist/families.hpp"
#include "hist/graph.hpp"
#include "hist/solver.hpp"
#include "hist/tree.hpp"

using namespace hist;

namespace {

Graph gen(const std::string& s) { return generate(FamilySpec::parse(s)); }

}  // namespace

TEST_CASE("dense graphs have degree-2-free spanning trees") {
    for (const std::string& s : {"kn:5", "kn:9", "kab:3,4"}) {
        CAPTURE(s);
        Graph g = gen(s);
        SearchVerdict v = solve_2k_st(g, 2);
        REQUIRE(v.found());
        CHECK(is_spanning_tree(*v.tree));
        CHECK(is_2k_st(*v.tree, 2));
    }
}

TEST_CASE("the pendant path forces a degree-2 vertex at every order") {
    for (int n = 6; n <= 14; ++n) {
        CAPTURE(n);
        SearchVerdict v = solve_2k_st(generate(FamilySpec{FamilySpec::Dn{n}}), 2);
        CHECK(v.not_exists());
    }
}

TEST_CASE("small non-existence instances") {
    CHECK(solve_2k_st(gen("path:4"), 2).not_exists());
    CHECK(solve_2k_st(gen("cycle:5"), 2).not_exists());
    CHECK(solve_2k_st(gen("gkd:2,2"), 2).not_exists());
    CHECK(solve_2k_st(gen("gkd:3,2"), 3).not_exists());
    // every spanning tree of K4 has a vertex of degree 2 or 3
    CHECK(solve_2k_st(gen("kn:4"), 3).not_exists());
    SearchVerdict k5 = solve_2k_st(gen("kn:5"), 3);
    REQUIRE(k5.found());  // the star: center degree 4 >= k+1
    CHECK(is_2k_st(*k5.tree, 3));
}

TEST_CASE("disconnected and trivial inputs") {
    CHECK(solve_2k_st(Graph(4, {{0, 1}, {2, 3}}), 2).not_exists());
    CHECK(solve_2k_st(Graph(1, {}), 2).found());
    CHECK(solve_2k_st(Graph(2, {{0, 1}}), 2).found());
    CHECK_THROWS(solve_2k_st(gen("kn:4"), 1));
}

TEST_CASE("budget exhaustion is reported, not misreported") {
    Graph hard = gen("gkd:2,4");  // n = 28, no valid tree
    SearchVerdict v = solve_2k_st(hard, 2, SearchBudget(50));
    CHECK(v.outcome == SearchVerdict::Outcome::BudgetExceeded);
    CHECK_FALSE(v.tree.has_value());
    CHECK(v.nodes_spent >= 50);
}

TEST_CASE("oracle agrees with the solver on fixed instances") {
    for (const std::string& s : {"kn:5", "kn:6", "cycle:5", "cycle:6", "path:5",
                                 "kab:2,3", "kab:3,3", "dn:7", "dn:9"}) {
        CAPTURE(s);
        Graph g = gen(s);
        for (int k : {2, 3}) {
            SearchVerdict a = solve_2k_st(g, k);
            SearchVerdict b = oracle_enumerate(g, k);
            CHECK(a.outcome == b.outcome);
            if (b.found()) {
                CHECK(is_spanning_tree(*b.tree));
                CHECK(is_2k_st(*b.tree, k));
            }
        }
    }
}

TEST_CASE("oracle guards its size cap") {
    CHECK_THROWS(oracle_enumerate(gen("kn:10"), 2));
    CHECK_NOTHROW(oracle_enumerate(gen("kn:9"), 2));
}

TEST_CASE("deleting an edge never creates a tree that was absent") {
    // monotonicity probe: if G has no valid tree, neither does any subgraph
    Graph g = gen("cycle:6");
    REQUIRE(solve_2k_st(g, 2).not_exists());
    auto edges = g.edge_list();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto sub = edges;
        sub.erase(sub.begin() + i);
        CHECK(solve_2k_st(Graph(6, sub), 2).not_exists());
    }
}
