#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hist {

using VertexId = int;

/// Immutable simple undirected graph. Adjacency is kept twice: sorted
/// neighbor lists for iteration and per-vertex bitsets for O(1) membership
/// (the improvement loop and the exact solver are membership-bound).
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    const std::vector<VertexId>& neighbors(VertexId u) const { return adj_.at(u); }
    int degree(VertexId u) const { return static_cast<int>(adj_.at(u).size()); }

    bool has_edge(VertexId u, VertexId v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

    bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

private:
    int n_ = 0;
    int m_ = 0;
    size_t words_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<uint64_t> bits_;  // n_ rows of words_ 64-bit words
};

/// Degree statistics: minimum degree, the degree-sum bound over non-adjacent
/// pairs (absent means the graph is complete), and the degree classes.
struct DegreeStats {
    int delta = 0;
    std::optional<int> sigma2;  // nullopt <=> complete graph
    std::map<int, std::vector<VertexId>> classes;

    bool sigma2_at_least(int bound) const { return !sigma2 || *sigma2 >= bound; }
};

DegreeStats degree_stats(const Graph& g);

constexpr int kUnreachable = -1;

/// BFS shortest-path length, kUnreachable across components.
int distance(const Graph& g, VertexId u, VertexId v);

/// Max pairwise distance; kUnreachable if disconnected.
int diameter(const Graph& g);

int num_components(const Graph& g);

bool is_connected(const Graph& g);

/// All paths u0...ud realizing the diameter d, as ordered vertex sequences.
/// Ordered lexicographically by endpoint pair, then by path. Both
/// orientations of a path appear (as distinct sequences). Throws on
/// disconnected input. Intended for small graphs.
std::vector<std::vector<VertexId>> diametral_paths(const Graph& g);

}  // namespace hist
