#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hist/families.hpp"
#include "hist/graph.hpp"

using namespace hist;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("construction and adjacency") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}});  // duplicate collapses
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(0, 7));
    CHECK(g.neighbors(1) == std::vector<VertexId>{0, 2});
    CHECK(g.degree(2) == 2);
    CHECK(g.edge_list() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 3}});

    CHECK_THROWS(Graph(3, {{0, 0}}));
    CHECK_THROWS(Graph(3, {{0, 3}}));
    CHECK_THROWS(Graph(2, {{-1, 0}}));
}

TEST_CASE("degree statistics") {
    Graph g = generate(FamilySpec{FamilySpec::Dn{10}});
    DegreeStats st = degree_stats(g);
    CHECK(st.delta == 1);
    REQUIRE(st.sigma2.has_value());
    CHECK(*st.sigma2 == 8);  // pendant (1) + farthest clique vertex (7)
    CHECK(st.sigma2_at_least(8));
    CHECK_FALSE(st.sigma2_at_least(9));
    CHECK(st.classes.at(1) == std::vector<VertexId>{9});
    CHECK(st.classes.at(2) == std::vector<VertexId>{8});

    Graph k5 = generate(FamilySpec{FamilySpec::Complete{5}});
    DegreeStats cst = degree_stats(k5);
    CHECK(cst.delta == 4);
    CHECK_FALSE(cst.sigma2.has_value());
    CHECK(cst.sigma2_at_least(1000000));
}

TEST_CASE("distances and connectivity") {
    Graph p5 = path_graph(5);
    CHECK(distance(p5, 0, 4) == 4);
    CHECK(distance(p5, 2, 2) == 0);
    CHECK(diameter(p5) == 4);
    CHECK(is_connected(p5));
    CHECK(num_components(p5) == 1);

    Graph two(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(distance(two, 0, 3) == kUnreachable);
    CHECK(diameter(two) == kUnreachable);
    CHECK(num_components(two) == 2);
    CHECK_FALSE(is_connected(two));

    CHECK(diameter(generate(FamilySpec{FamilySpec::Dn{10}})) == 3);
    CHECK(diameter(generate(FamilySpec{FamilySpec::Complete{6}})) == 1);
    CHECK(diameter(generate(FamilySpec{FamilySpec::CompleteBipartite{3, 4}})) == 2);
}

TEST_CASE("diameter agrees with an all-pairs recomputation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        // Floyd-Warshall reference.
        const int inf = 1 << 20;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
        for (int i = 0; i < n; ++i) d[i][i] = 0;
        for (auto [u, v] : g.edge_list()) d[u][v] = d[v][u] = 1;
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d[i][j] = std::min(d[i][j], d[i][w] + d[w][j]);
        int ref = 0;
        bool conn = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (d[i][j] >= inf) conn = false;
                else ref = std::max(ref, d[i][j]);
            }
        CHECK(is_connected(g) == conn);
        CHECK(diameter(g) == (conn ? ref : kUnreachable));
        if (conn)
            for (int i = 0; i < n; ++i) CHECK(distance(g, 0, i) == d[0][i]);
    }
}

TEST_CASE("diametral paths") {
    Graph p4 = path_graph(4);
    auto paths = diametral_paths(p4);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(paths[1] == std::vector<VertexId>{3, 2, 1, 0});

    Graph dn = generate(FamilySpec{FamilySpec::Dn{10}});
    auto dp = diametral_paths(dn);
    CHECK_FALSE(dp.empty());
    for (const auto& p : dp) {
        CHECK(p.size() == 4);
        // tail vertex 9 is the only vertex at distance 3 from anything
        CHECK((p.front() == 9 || p.back() == 9));
        for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(dn.has_edge(p[i], p[i + 1]));
    }

    CHECK_THROWS(diametral_paths(Graph(3, {{0, 1}})));
}
