#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hist/families.hpp"
#include "hist/graph.hpp"

using namespace hist;

TEST_CASE("spec text round-trips") {
    for (const std::string& s :
         {"dn:10", "ahat:3,2,2", "bp:4", "gkd:2,2", "kn:8", "kab:3,4", "path:6", "cycle:5"}) {
        CHECK(FamilySpec::parse(s).to_string() == s);
    }
    CHECK_THROWS(FamilySpec::parse("zzz:3"));
    CHECK_THROWS(FamilySpec::parse("dn:"));
    CHECK_THROWS(FamilySpec::parse("ahat:2,x"));
}

TEST_CASE("pendant-clique family") {
    for (int n = 5; n <= 20; ++n) {
        Graph g = generate(FamilySpec{FamilySpec::Dn{n}});
        CHECK(g.num_vertices() == n);
        CHECK(g.num_edges() == (n - 2) * (n - 3) / 2 + 2);
        DegreeStats st = degree_stats(g);
        CHECK(st.delta == 1);
        CHECK(*st.sigma2 == n - 2);
        CHECK(diameter(g) == 3);
        auto rec = recognize_Dn(g);
        REQUIRE(rec.has_value());
        CHECK(*rec == n);
    }
    CHECK_FALSE(recognize_Dn(generate(FamilySpec{FamilySpec::Complete{8}})).has_value());
    CHECK_FALSE(recognize_Dn(generate(FamilySpec{FamilySpec::Path{10}})).has_value());
}

TEST_CASE("hub-block family round-trips") {
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> p(m, 1);
        while (true) {
            Graph g = generate(FamilySpec{FamilySpec::Ahat{p}});
            int order = 1 + m;
            for (int pi : p) order += pi;
            CHECK(g.num_vertices() == order);
            if (order >= 5) {
                DegreeStats st = degree_stats(g);
                REQUIRE(st.sigma2.has_value());
                CHECK(*st.sigma2 == 4);
                CHECK(diameter(g) == 2);
            }
            auto rec = recognize_AB(g);
            REQUIRE(rec.has_value());
            CHECK(rec->family == ABMembership::Family::Ahat);
            std::vector<int> want = p;
            std::sort(want.begin(), want.end());
            CHECK(rec->params == want);
            // advance odometer over p_i in [1,4]
            int i = 0;
            while (i < m && p[i] == 4) p[i++] = 1;
            if (i == m) break;
            ++p[i];
        }
    }
}

TEST_CASE("bridged two-block family round-trips") {
    for (int p = 1; p <= 6; ++p) {
        Graph g = generate(FamilySpec{FamilySpec::Bp{p}});
        CHECK(g.num_vertices() == 5 + p);
        DegreeStats st = degree_stats(g);
        REQUIRE(st.sigma2.has_value());
        // p = 1 leaves a single degree-2 interior, so the bound sits at 5
        CHECK(*st.sigma2 == (p >= 2 ? 4 : 5));
        auto rec = recognize_AB(g);
        REQUIRE(rec.has_value());
        CHECK(rec->family == ABMembership::Family::Bp);
        CHECK(rec->params == std::vector<int>{p});
    }
}

TEST_CASE("recognizers reject near misses") {
    CHECK_FALSE(recognize_AB(generate(FamilySpec{FamilySpec::Complete{7}})).has_value());
    CHECK_FALSE(recognize_AB(generate(FamilySpec{FamilySpec::Dn{10}})).has_value());
    CHECK_FALSE(recognize_AB(generate(FamilySpec{FamilySpec::CompleteBipartite{3, 5}})).has_value());
    // the five-cycle is the smallest hub-block graph
    auto c5 = recognize_AB(generate(FamilySpec{FamilySpec::Cycle{5}}));
    REQUIRE(c5.has_value());
    CHECK(c5->family == ABMembership::Family::Ahat);
    CHECK(c5->params == std::vector<int>{1, 1});
}

TEST_CASE("bipartite-core family with pendant blocks") {
    for (auto [k, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {2, 6}, {3, 2},
                                                        {3, 4}, {3, 6}, {4, 3}, {4, 6}}) {
        Graph g = generate(FamilySpec{FamilySpec::Gkd{k, d}});
        int l = d / (k - 1);
        CHECK(g.num_vertices() == 2 * d + l * (d + 1));
        CHECK(degree_stats(g).delta == d);
        CHECK(is_connected(g));
    }
    CHECK_THROWS(generate(FamilySpec{FamilySpec::Gkd{3, 5}}));  // k-1 must divide d
}

TEST_CASE("random generator: minimum degree") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        int n = 30 + static_cast<int>(seed);
        int target = 5 + static_cast<int>(seed % 7);
        Graph g = random_graph_min_degree(n, target, seed);
        CHECK(g.num_vertices() == n);
        CHECK(is_connected(g));
        CHECK(degree_stats(g).delta >= target);
        // determinism
        Graph h = random_graph_min_degree(n, target, seed);
        CHECK(g.edge_list() == h.edge_list());
    }
    CHECK_THROWS(random_graph_min_degree(5, 5, 1));
}

TEST_CASE("random generator: degree-sum bound") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 10 + static_cast<int>(seed % 5);
        Graph g = random_graph_sigma2(n, n - 2, seed);
        CHECK(g.num_vertices() == n);
        CHECK(is_connected(g));
        CHECK(degree_stats(g).sigma2_at_least(n - 2));
        Graph h = random_graph_sigma2(n, n - 2, seed);
        CHECK(g.edge_list() == h.edge_list());
    }
    // a target beyond 2(n-2) forces the complete graph
    CHECK(random_graph_sigma2(8, 13, 3).is_complete());
}
