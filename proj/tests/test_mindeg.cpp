#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hist/families.hpp"
#include "hist/graph.hpp"
#include "hist/mindeg.hpp"
#include "hist/tree.hpp"

using namespace hist;

TEST_CASE("threshold constants") {
    Thresholds t2 = compute_thresholds(2, 10000);
    CHECK(t2.c_k == doctest::Approx(4.0).epsilon(1e-12));
    // p = ((c^2 - 0) sqrt(n) + k c) / (2c) with c = 4, n = 10000
    CHECK(t2.p == doctest::Approx(201.0).epsilon(1e-12));
    CHECK(t2.regime_ok);
    CHECK(t2.min_degree_bound() == doctest::Approx(400.0));

    Thresholds t3 = compute_thresholds(3, 500);
    CHECK(t3.c_k == doctest::Approx(std::sqrt(6.0 * (5.0 + 2.0 * std::sqrt(6.0)))));
    CHECK(t3.c_k == doctest::Approx(7.706742).epsilon(1e-6));

    CHECK_FALSE(compute_thresholds(2, 9).regime_ok);  // sqrt(9) < 4
    CHECK(compute_thresholds(2, 17).regime_ok);
}

TEST_CASE("threshold chain across the grid") {
    for (int k = 2; k <= 8; ++k)
        for (int n : {500, 2000, 50000}) {
            Thresholds th = compute_thresholds(k, n);
            if (!th.regime_ok) continue;
            CHECK(th.min_degree_bound() > th.p);
            CHECK(th.p > k + 2);
            CHECK(th.admissible_bound > 0);
        }
}

TEST_CASE("forest growth invariants") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        int n = 300, k = 2;
        Thresholds th = compute_thresholds(k, n);
        int delta = static_cast<int>(std::ceil(th.min_degree_bound()));
        Graph g = random_graph_min_degree(n, delta, seed);
        ConstrainedForest f = grow_forest(g, th);
        // degrees avoid [2, k+1]; components meet the size floor
        for (VertexId v = 0; v < n; ++v) {
            int d = f.forest.tree_degree(v);
            CHECK((d <= 1 || d >= k + 2));
            if (d > 0) CHECK(f.component_of[v] >= 0);
        }
        for (int size : f.component_size) CHECK(size >= th.p);

        TreeEdgeSet t0 = attach_and_span(g, f);
        CHECK(is_spanning_tree(t0));
        // the starting tree is inside the budget the improvement loop needs
        CHECK(class_vector(t0, k).mu < th.admissible_bound);
    }
}

TEST_CASE("complete graphs collapse to a single star") {
    Graph g = generate(FamilySpec{FamilySpec::Complete{20}});
    MindegResult r = find_2k_st_mindeg(g, 2);
    REQUIRE(r.ok());
    CHECK(is_2k_st(*r.tree, 2));
    int leaves = 0, hubs = 0;
    for (VertexId v = 0; v < 20; ++v) {
        int d = r.tree->tree_degree(v);
        if (d == 1) ++leaves;
        if (d == 19) ++hubs;
    }
    CHECK(hubs == 1);
    CHECK(leaves == 19);
}

TEST_CASE("improvement repairs a Hamiltonian path in a complete graph") {
    Graph k6 = generate(FamilySpec{FamilySpec::Complete{6}});
    TreeEdgeSet path(k6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    Thresholds th = compute_thresholds(2, 6);
    std::vector<ImprovementMove> trace;
    MindegResult r = improve(k6, path, th, 2, &trace);
    REQUIRE(r.ok());
    CHECK(is_2k_st(*r.tree, 2));
    CHECK_FALSE(trace.empty());
    for (const auto& mv : trace) {
        CHECK(lex_less(mv.after, mv.before));
        CHECK(mv.after.mu <= mv.before.mu);
    }
}

TEST_CASE("sparse graphs below the hypothesis report being stuck") {
    Graph c10 = generate(FamilySpec{FamilySpec::Cycle{10}});
    MindegResult r = find_2k_st_mindeg(c10, 2);
    CHECK_FALSE(r.ok());
    REQUIRE(r.stuck.has_value());
    CHECK_FALSE(r.stuck->reason.empty());
}

TEST_CASE("pipeline on random instances at the degree threshold") {
    for (auto [n, k, seeds] : std::vector<std::tuple<int, int, int>>{{400, 2, 4}, {500, 3, 2}}) {
        Thresholds th = compute_thresholds(k, n);
        int delta = static_cast<int>(std::ceil(th.min_degree_bound()));
        for (uint64_t s = 1; s <= static_cast<uint64_t>(seeds); ++s) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(s);
            Graph g = random_graph_min_degree(n, delta, 977 * s);
            std::vector<ImprovementMove> trace;
            MindegResult r = find_2k_st_mindeg(g, k, &trace);
            REQUIRE(r.ok());
            CHECK(is_spanning_tree(*r.tree));
            CHECK(is_2k_st(*r.tree, k));
            for (const auto& mv : trace) {
                CHECK(lex_less(mv.after, mv.before));
                CHECK(mv.after.mu <= mv.before.mu);
            }
        }
    }
}
