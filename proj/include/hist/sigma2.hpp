#pragma once

#include <optional>
#include <vector>

#include "hist/graph.hpp"
#include "hist/solver.hpp"
#include "hist/tree.hpp"

namespace hist {

/// A diametral path u0 u1 u2 u3 together with the scores it was optimized
/// under: endpoint degree (minimized), max{3 - d(u1), 0} (minimized), and
/// |N(u0) cap (N(u1) cup N(u2))| (maximized); ties broken by lexicographic
/// vertex sequence.
struct DiametralContext {
    std::vector<VertexId> path;  // u0, u1, u2, u3
    int endpoint_degree = 0;
    int u1_deficiency = 0;
    int overlap = 0;

    VertexId u(int i) const { return path.at(i); }
};

DiametralContext choose_diametral_path(const Graph& g);

/// A subtree T with a designated hub that every leftover vertex will hang
/// from: all of N(u0) plus u0,u3 are in T, every non-hub vertex of T has
/// tree-degree 1 or >= 3, and n - |V(T)| + d_T(hub) - 3 >= 0.
struct PartialHist {
    TreeEdgeSet tree;
    VertexId hub;
};

/// Case analysis for endpoint degree <= 3. Throws ClaimViolation (a
/// std::logic_error) naming the structural fact that failed.
PartialHist build_case1(const Graph& g, const DiametralContext& ctx);

/// Case analysis for endpoint degree >= 4.
PartialHist build_case2(const Graph& g, const DiametralContext& ctx);

/// Attaches every vertex outside the subtree to the hub and validates the
/// result as a degree-2-free spanning tree.
TreeEdgeSet complete_hist(const Graph& g, const PartialHist& ph);

struct ClaimViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct Sigma2Result {
    std::optional<TreeEdgeSet> tree;
    bool is_dn = false;  // no spanning tree exists because the input is D_n

    bool ok() const { return tree.has_value(); }
};

/// Degree-2-free spanning tree construction under sigma2(G) >= n-2, n >= 10:
/// returns the tree, or is_dn when the input is the unique exception.
/// Diameter-1 inputs get a star, diameter-2 inputs are resolved by the exact
/// solver (existence is guaranteed, but no construction is available), and
/// diameter-3 inputs go through the case analysis. Inputs with n in {8,9}
/// are routed to the exact solver as well. Precondition violations throw.
Sigma2Result find_hist_sigma2(const Graph& g);

}  // namespace hist
