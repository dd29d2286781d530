#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hist/families.hpp"
#include "hist/graph.hpp"
#include "hist/sigma2.hpp"
#include "hist/solver.hpp"
#include "hist/tree.hpp"

using namespace hist;

TEST_CASE("complete graphs get a star") {
    Graph k10 = generate(FamilySpec{FamilySpec::Complete{10}});
    Sigma2Result r = find_hist_sigma2(k10);
    REQUIRE(r.ok());
    CHECK(is_2k_st(*r.tree, 2));
    CHECK(r.tree->tree_degree(0) == 9);
}

TEST_CASE("the pendant-clique exception is recognized, not searched") {
    for (int n : {10, 12, 14}) {
        Graph g = generate(FamilySpec{FamilySpec::Dn{n}});
        Sigma2Result r = find_hist_sigma2(g);
        CHECK_FALSE(r.ok());
        CHECK(r.is_dn);
    }
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS(find_hist_sigma2(generate(FamilySpec{FamilySpec::Cycle{12}})));  // sigma2 = 4
    CHECK_THROWS(find_hist_sigma2(generate(FamilySpec{FamilySpec::Complete{7}})));  // n < 8
    CHECK_THROWS(find_hist_sigma2(Graph(12, {{0, 1}})));  // disconnected
}

TEST_CASE("diametral path selection on the exception graph") {
    Graph g = generate(FamilySpec{FamilySpec::Dn{10}});
    DiametralContext ctx = choose_diametral_path(g);
    REQUIRE(ctx.path.size() == 4);
    CHECK(ctx.u(0) == 9);  // the pendant is the unique minimum-degree endpoint
    CHECK(ctx.endpoint_degree == 1);
    CHECK(g.degree(ctx.u(0)) + g.degree(ctx.u(3)) == 10 - 2);
}

TEST_CASE("diameter-2 inputs are handled") {
    Graph g = generate(FamilySpec{FamilySpec::CompleteBipartite{5, 7}});
    REQUIRE(diameter(g) == 2);
    REQUIRE(degree_stats(g).sigma2_at_least(10));
    Sigma2Result r = find_hist_sigma2(g);
    REQUIRE(r.ok());
    CHECK(is_2k_st(*r.tree, 2));
}

TEST_CASE("random sweep, validated and cross-checked") {
    int solved = 0;
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 10 + static_cast<int>(seed % 5);
        Graph g = random_graph_sigma2(n, n - 2, 31 * seed);
        if (recognize_Dn(g)) continue;
        CAPTURE(seed);
        CAPTURE(n);
        Sigma2Result r = find_hist_sigma2(g);
        REQUIRE(r.ok());
        CHECK(is_spanning_tree(*r.tree));
        CHECK(is_2k_st(*r.tree, 2));
        ++solved;
        if (seed % 6 == 0) CHECK(solve_2k_st(g, 2).found());
    }
    CHECK(solved >= 55);
}

TEST_CASE("small orders route through the exact search") {
    for (int n : {8, 9}) {
        Graph g = generate(FamilySpec{FamilySpec::Complete{n}});
        Sigma2Result r = find_hist_sigma2(g);
        REQUIRE(r.ok());
        CHECK(is_2k_st(*r.tree, 2));
    }
}
