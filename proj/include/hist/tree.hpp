#pragma once

#include <set>
#include <vector>

#include "hist/graph.hpp"

namespace hist {

using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// An acyclic subset of a host graph's edges (a spanning forest or tree)
/// with per-vertex degrees. Values are immutable once built; swap_edge and
/// friends return fresh values.
class TreeEdgeSet {
public:
    explicit TreeEdgeSet(const Graph& host);
    TreeEdgeSet(const Graph& host, const std::vector<Edge>& edges);

    const Graph& host() const { return *host_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::set<Edge>& edges() const { return edges_; }
    bool contains(VertexId u, VertexId v) const { return edges_.count(make_edge(u, v)) > 0; }
    int tree_degree(VertexId u) const { return deg_.at(u); }
    const std::vector<int>& tree_degrees() const { return deg_; }

    /// Sorted tree-neighbors of u.
    std::vector<VertexId> tree_neighbors(VertexId u) const;

    /// New value with `remove` dropped and `add` inserted. Throws if `remove`
    /// is absent, `add` is already present, `add` is not a host edge, or the
    /// result has a cycle.
    TreeEdgeSet swap_edge(Edge remove, Edge add) const;

    /// Inserting a present edge is a no-op; removing an absent edge throws.
    TreeEdgeSet with_edge(VertexId u, VertexId v) const;
    TreeEdgeSet without_edge(VertexId u, VertexId v) const;

private:
    void check_acyclic_and_count() const;

    const Graph* host_;
    std::set<Edge> edges_;
    std::vector<int> deg_;
};

bool is_spanning_tree(const TreeEdgeSet& t);

/// True iff no vertex of the spanning tree t has degree in [2,k].
/// k = 2 is the degree-2-free (homeomorphically irreducible) predicate.
bool is_2k_st(const TreeEdgeSet& t, int k);

/// (|V_2(T)|, ..., |V_k(T)|) plus mu = sum over 2<=i<=k+1 of (k+2-i)|V_i(T)|.
struct DegreeClassVector {
    int k = 2;
    std::vector<int> counts;  // counts[i-2] = |V_i(T)| for i in [2,k]
    long long mu = 0;

    bool all_zero() const;
};

DegreeClassVector class_vector(const TreeEdgeSet& t, int k);
DegreeClassVector class_vector_of_degrees(const std::vector<int>& deg, int k);

/// Strict lexicographic comparison on counts; throws on k mismatch.
bool lex_less(const DegreeClassVector& a, const DegreeClassVector& b);

/// The unique path joining u and v within the edge set, endpoints in the
/// given order; u == v yields the single-vertex path. Throws if u and v lie
/// in different components.
std::vector<VertexId> tree_path(const TreeEdgeSet& t, VertexId u, VertexId v);

}  // namespace hist
