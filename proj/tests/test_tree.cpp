#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "hist/families.hpp"
#include "hist/graph.hpp"
#include "hist/tree.hpp"

using namespace hist;

namespace {

Graph complete(int n) { return generate(FamilySpec{FamilySpec::Complete{n}}); }

}  // namespace

TEST_CASE("edge set invariants") {
    Graph k4 = complete(4);
    TreeEdgeSet t(k4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(t.num_edges() == 3);
    CHECK(t.contains(1, 0));
    CHECK_FALSE(t.contains(1, 2));
    CHECK(t.tree_degree(0) == 3);
    CHECK(t.tree_neighbors(0) == std::vector<VertexId>{1, 2, 3});
    CHECK(t.tree_neighbors(2) == std::vector<VertexId>{0});

    CHECK_THROWS(TreeEdgeSet(k4, {{0, 1}, {1, 2}, {0, 2}}));  // cycle
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS(TreeEdgeSet(p3, {{0, 2}}));  // not a host edge
}

TEST_CASE("swap preserves spanning trees (exhaustive, small hosts)") {
    for (int n = 3; n <= 6; ++n) {
        Graph g = complete(n);
        std::vector<Edge> star;
        for (int i = 1; i < n; ++i) star.push_back({0, i});
        TreeEdgeSet t(g, star);
        REQUIRE(is_spanning_tree(t));
        for (VertexId a = 1; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b) {
                // replacing 0a with ab keeps a spanning tree
                TreeEdgeSet s = t.swap_edge({0, a}, {a, b});
                CHECK(is_spanning_tree(s));
                CHECK(s.tree_degree(0) == n - 2);
                CHECK(s.tree_degree(b) == 2);
                // the original value is untouched
                CHECK(t.contains(0, a));
            }
        CHECK_THROWS(t.swap_edge({1, 2}, {0, 1}));            // remove absent
        if (n >= 4) CHECK_THROWS(t.swap_edge({0, 1}, {0, 2}));  // add duplicate -> cycle
    }
}

TEST_CASE("with/without edge") {
    Graph k4 = complete(4);
    TreeEdgeSet f(k4);
    CHECK(f.num_edges() == 0);
    TreeEdgeSet f1 = f.with_edge(2, 3).with_edge(0, 1);
    CHECK(f1.num_edges() == 2);
    CHECK(f1.without_edge(0, 1).num_edges() == 1);
    CHECK_THROWS(f1.without_edge(0, 2));
}

TEST_CASE("spanning tree and degree-window predicates") {
    Graph k5 = complete(5);
    TreeEdgeSet star(k5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    TreeEdgeSet path(k5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(is_spanning_tree(star));
    CHECK(is_spanning_tree(path));
    CHECK(is_2k_st(star, 2));  // degrees 4,1,1,1,1
    CHECK(is_2k_st(star, 3));
    CHECK_FALSE(is_2k_st(star, 4));  // 4 lands in [2,4]
    CHECK_FALSE(is_2k_st(path, 2));
    TreeEdgeSet forest(k5, {{0, 1}});
    CHECK_FALSE(is_spanning_tree(forest));
    CHECK_THROWS(is_2k_st(forest, 2));
}

TEST_CASE("degree class vectors") {
    Graph k4 = complete(4);
    TreeEdgeSet p4(k4, {{0, 1}, {1, 2}, {2, 3}});
    DegreeClassVector c2 = class_vector(p4, 2);
    CHECK(c2.counts == std::vector<int>{2});  // two degree-2 vertices
    CHECK(c2.mu == 4);                        // (k+2-2) * 2
    CHECK_FALSE(c2.all_zero());

    Graph k6 = complete(6);
    // spider: center 0 of degree 3, one leg of length 2
    TreeEdgeSet spider(k6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    DegreeClassVector c3 = class_vector(spider, 3);
    CHECK(c3.counts == std::vector<int>{2, 1});  // V2 = {3,4}, V3 = {0}
    CHECK(c3.mu == 3 * 2 + 2 * 1);

    TreeEdgeSet star(k6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    DegreeClassVector s3 = class_vector(star, 3);
    CHECK(s3.all_zero());
    CHECK(s3.mu == 0);

    CHECK(class_vector_of_degrees({1, 2, 2, 1}, 2).counts == std::vector<int>{2});
}

TEST_CASE("degree sum identity") {
    // In any tree, sum over i of i * |V_i| = 2(n-1).
    Graph k7 = complete(7);
    std::vector<TreeEdgeSet> trees = {
        TreeEdgeSet(k7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
        TreeEdgeSet(k7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}),
        TreeEdgeSet(k7, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}}),
    };
    for (const auto& t : trees) {
        long long total = 0;
        for (VertexId v = 0; v < 7; ++v) total += t.tree_degree(v);
        CHECK(total == 2 * (7 - 1));
    }
}

TEST_CASE("lexicographic comparison") {
    DegreeClassVector a{3, {0, 2}, 0}, b{3, {1, 0}, 0}, c{3, {0, 2}, 0};
    CHECK(lex_less(a, b));
    CHECK_FALSE(lex_less(b, a));
    CHECK_FALSE(lex_less(a, c));
    DegreeClassVector other{4, {0, 0, 0}, 0};
    CHECK_THROWS(lex_less(a, other));
}

TEST_CASE("tree paths") {
    Graph k6 = complete(6);
    TreeEdgeSet t(k6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK(tree_path(t, 0, 4) == std::vector<VertexId>{0, 1, 3, 4});
    CHECK(tree_path(t, 4, 0) == std::vector<VertexId>{4, 3, 1, 0});
    CHECK(tree_path(t, 2, 2) == std::vector<VertexId>{2});
    CHECK_THROWS(tree_path(t, 0, 5));  // 5 is outside the forest
}
