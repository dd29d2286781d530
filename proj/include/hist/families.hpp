#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hist/graph.hpp"

namespace hist {

/// Parameterized graph family. Textual form (used by the CLI):
///   dn:10 | ahat:3,2,2 | bp:4 | gkd:2,2 | kn:8 | kab:3,4 | path:6 | cycle:5
struct FamilySpec {
    struct Dn { int n; };                     // K_{n-2} plus a pendant 2-edge path
    struct Ahat { std::vector<int> p; };      // hub-identified K_{2,p_i} blocks, x_{i,2} clique
    struct Bp { int p; };                     // Ahat(2,p) plus the edge between the K_{2,2} interiors
    struct Gkd { int k, d; };                 // K_{d,d} core with d/(k-1) pendant K_{d+1} blocks
    struct Complete { int n; };
    struct CompleteBipartite { int a, b; };
    struct Path { int n; };
    struct Cycle { int n; };

    std::variant<Dn, Ahat, Bp, Gkd, Complete, CompleteBipartite, Path, Cycle> variant;

    std::string to_string() const;
    static FamilySpec parse(const std::string& text);
};

/// Deterministic generator; vertex labeling conventions per family are
/// frozen (documented in families.cpp next to each builder).
Graph generate(const FamilySpec& spec);

/// Returns n iff g is (labeled-isomorphic to a relabeling of) D_n; the check
/// is structural: one degree-1 vertex, its neighbor of degree 2, an
/// attachment vertex of degree n-2, and a clique on the remaining n-2.
std::optional<int> recognize_Dn(const Graph& g);

/// Membership report for the diameter-2 exceptional families.
struct ABMembership {
    enum class Family { Ahat, Bp } family;
    std::vector<int> params;  // sorted p_i for Ahat, {p} for Bp
};

std::optional<ABMembership> recognize_AB(const Graph& g);

/// Connected graph with minimum degree >= delta_target, deterministic per
/// seed. Throws if delta_target >= n.
Graph random_graph_min_degree(int n, int delta_target, uint64_t seed);

/// Connected graph with sigma2 >= sigma2_target via rejection sampling with
/// a degree-boosting repair step (cap 10000 attempts). A target above
/// 2(n-2) forces the complete graph, which is returned directly.
Graph random_graph_sigma2(int n, int sigma2_target, uint64_t seed);

}  // namespace hist
