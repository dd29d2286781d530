#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hist/graph.hpp"
#include "hist/tree.hpp"

namespace hist {

/// The quantities the minimum-degree construction is parameterized by.
struct Thresholds {
    int k = 2;
    int n = 0;
    double c_k = 0;              // sqrt(k(k-1)(k+2*sqrt(2k)+2))
    double p = 0;                // ((c_k^2 - k(k-1)(k-2)) sqrt(n) + k c_k) / (2 c_k)
    double admissible_bound = 0; // k(kpn + 2(c_k sqrt(n) - p + k)n) / ((c_k sqrt(n) - p + k)p)
    bool regime_ok = false;      // sqrt(n) > c_k, where c_k sqrt(n) > p > k+2 is guaranteed

    double min_degree_bound() const { return c_k * std::sqrt(static_cast<double>(n)); }
};

Thresholds compute_thresholds(int k, int n);

/// Acyclic subgraph with no vertex of degree in [2, k+1] and every component
/// of size >= p (p kept as an exact real; comparisons use >= p directly).
struct ConstrainedForest {
    TreeEdgeSet forest;
    std::vector<int> component_of;   // -1 for vertices outside the forest
    std::vector<int> component_size; // per component id
};

/// Grows a constrained forest, maximal under three augmentations: seeding a
/// star on a vertex with >= p outside neighbors, attaching an outside vertex
/// as a leaf of a forest vertex of degree >= k+2, and promoting a forest
/// leaf with >= k+1 outside neighbors to absorb them all. The initial
/// component is the closed star at a maximum-degree vertex when that star
/// qualifies. Best-effort on graphs below the degree hypothesis.
ConstrainedForest grow_forest(const Graph& g, const Thresholds& th);

/// Attaches every vertex outside the forest to its lowest-id leaf neighbor,
/// then completes the forest to a spanning tree (joining components with
/// lowest-id edges first). Throws AttachError when some outside vertex has
/// no leaf neighbor (cannot happen under the degree hypothesis).
struct AttachError : std::runtime_error {
    VertexId straggler;
    AttachError(VertexId v, const std::string& msg) : std::runtime_error(msg), straggler(v) {}
};

TreeEdgeSet attach_and_span(const Graph& g, const ConstrainedForest& f);

/// One committed step of the improvement loop, for auditing.
struct ImprovementMove {
    enum class Kind { Swap, Shift } kind;
    VertexId u, v, w;              // offending vertex, outside-tree neighbor, its path neighbor
    std::vector<VertexId> shifted; // Z set for Shift moves
    DegreeClassVector before, after;
};

struct Stuck {
    VertexId witness;   // vertex of tree-degree in [2,k] with no applying move
    std::string reason;
};

struct MindegResult {
    std::optional<TreeEdgeSet> tree;  // spanning tree with no degree in [2,k]
    std::optional<Stuck> stuck;

    bool ok() const { return tree.has_value(); }
};

/// Lexicographic improvement loop: repeatedly picks the lowest-id vertex u
/// of minimal tree-degree s in [2,k], scans u's non-tree neighbors v in
/// ascending order, and commits the first edge swap (when the path-neighbor
/// degree t_v is outside {s, s+1}) or subtree shift (when Z_v is contained
/// in N(u)) that applies. Every committed move strictly lex-decreases
/// (|V_2|,...,|V_k|) and never increases mu, so the loop terminates.
MindegResult improve(const Graph& g, const TreeEdgeSet& t0, const Thresholds& th, int k,
                     std::vector<ImprovementMove>* trace = nullptr);

/// Full pipeline: thresholds -> forest -> spanning completion -> improve.
/// Guaranteed to succeed when delta(G) >= c_k sqrt(n); best-effort below.
MindegResult find_2k_st_mindeg(const Graph& g, int k,
                               std::vector<ImprovementMove>* trace = nullptr);

}  // namespace hist
