#pragma once

#include <cstdint>
#include <optional>

#include "hist/graph.hpp"
#include "hist/tree.hpp"

namespace hist {

struct SearchBudget {
    uint64_t max_nodes = 200'000'000;

    SearchBudget() = default;
    explicit SearchBudget(uint64_t nodes) : max_nodes(nodes) {
        if (nodes < 1) throw std::invalid_argument("budget must allow at least one node");
    }
};

struct SearchVerdict {
    enum class Outcome { Found, NotExists, BudgetExceeded };

    Outcome outcome;
    std::optional<TreeEdgeSet> tree;  // set iff Found
    uint64_t nodes_spent = 0;

    bool found() const { return outcome == Outcome::Found; }
    bool not_exists() const { return outcome == Outcome::NotExists; }
};

/// Decides [2,k]-ST existence by branch and bound over edge inclusion.
/// Edges are branched in BFS order from a max-degree root; per-vertex
/// feasible tree-degree intervals, a global degree lower-bound sum, cycle
/// detection and connectivity of the undeleted graph prune the search.
/// Deterministic for a fixed budget. NotExists only after exhaustion.
SearchVerdict solve_2k_st(const Graph& g, int k, const SearchBudget& budget = {});

/// Independent brute-force oracle: enumerates every spanning tree
/// (contraction/deletion recursion) and tests each with is_2k_st.
/// Restricted to n <= 9.
SearchVerdict oracle_enumerate(const Graph& g, int k);

}  // namespace hist
