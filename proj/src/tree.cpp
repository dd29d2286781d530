#include "hist/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hist {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

TreeEdgeSet::TreeEdgeSet(const Graph& host)
    : host_(&host), deg_(host.num_vertices(), 0) {}

TreeEdgeSet::TreeEdgeSet(const Graph& host, const std::vector<Edge>& edges)
    : host_(&host), deg_(host.num_vertices(), 0) {
    for (auto [u, v] : edges) edges_.insert(make_edge(u, v));
    for (auto [u, v] : edges_) {
        ++deg_[u];
        ++deg_[v];
    }
    check_acyclic_and_count();
}

void TreeEdgeSet::check_acyclic_and_count() const {
    Dsu dsu(host_->num_vertices());
    for (auto [u, v] : edges_) {
        if (!host_->has_edge(u, v))
            throw std::invalid_argument("tree edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") not in host graph");
        if (!dsu.unite(u, v))
            throw std::invalid_argument("edge set contains a cycle through (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

std::vector<VertexId> TreeEdgeSet::tree_neighbors(VertexId u) const {
    std::vector<VertexId> out;
    for (auto [a, b] : edges_) {
        if (a == u) out.push_back(b);
        else if (b == u) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TreeEdgeSet TreeEdgeSet::swap_edge(Edge remove, Edge add) const {
    remove = make_edge(remove.first, remove.second);
    add = make_edge(add.first, add.second);
    if (!edges_.count(remove)) throw std::invalid_argument("swap_edge: remove edge not present");
    if (edges_.count(add) && add != remove)
        throw std::invalid_argument("swap_edge: add edge already present");
    TreeEdgeSet out = *this;
    out.edges_.erase(remove);
    --out.deg_[remove.first];
    --out.deg_[remove.second];
    out.edges_.insert(add);
    ++out.deg_[add.first];
    ++out.deg_[add.second];
    out.check_acyclic_and_count();
    return out;
}

TreeEdgeSet TreeEdgeSet::with_edge(VertexId u, VertexId v) const {
    TreeEdgeSet out = *this;
    if (out.edges_.insert(make_edge(u, v)).second) {
        ++out.deg_[u];
        ++out.deg_[v];
        out.check_acyclic_and_count();
    }
    return out;
}

TreeEdgeSet TreeEdgeSet::without_edge(VertexId u, VertexId v) const {
    TreeEdgeSet out = *this;
    if (!out.edges_.erase(make_edge(u, v)))
        throw std::invalid_argument("without_edge: edge not present");
    --out.deg_[u];
    --out.deg_[v];
    return out;
}

bool is_spanning_tree(const TreeEdgeSet& t) {
    const int n = t.host().num_vertices();
    if (t.num_edges() != n - 1) return false;
    // Acyclic with n-1 edges and no degree-0 vertex left out: connectivity
    // follows from edge count once every vertex is touched.
    Dsu dsu(n);
    int merges = 0;
    for (auto [u, v] : t.edges())
        if (dsu.unite(u, v)) ++merges;
    return merges == n - 1;
}

bool is_2k_st(const TreeEdgeSet& t, int k) {
    if (k < 2) throw std::invalid_argument("is_2k_st: k must be >= 2");
    if (!is_spanning_tree(t)) throw std::invalid_argument("is_2k_st: not a spanning tree");
    for (int d : t.tree_degrees())
        if (d >= 2 && d <= k) return false;
    return true;
}

bool DegreeClassVector::all_zero() const {
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
}

DegreeClassVector class_vector_of_degrees(const std::vector<int>& deg, int k) {
    if (k < 2) throw std::invalid_argument("class_vector: k must be >= 2");
    DegreeClassVector cv;
    cv.k = k;
    cv.counts.assign(k - 1, 0);
    for (int d : deg) {
        if (d >= 2 && d <= k) ++cv.counts[d - 2];
        if (d >= 2 && d <= k + 1) cv.mu += k + 2 - d;
    }
    return cv;
}

DegreeClassVector class_vector(const TreeEdgeSet& t, int k) {
    return class_vector_of_degrees(t.tree_degrees(), k);
}

bool lex_less(const DegreeClassVector& a, const DegreeClassVector& b) {
    if (a.k != b.k) throw std::invalid_argument("lex_less: k mismatch");
    return std::lexicographical_compare(a.counts.begin(), a.counts.end(),
                                        b.counts.begin(), b.counts.end());
}

std::vector<VertexId> tree_path(const TreeEdgeSet& t, VertexId u, VertexId v) {
    const int n = t.host().num_vertices();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("tree_path: vertex out of range");
    if (u == v) return {u};
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [a, b] : t.edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<VertexId> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<VertexId> q{u};
    seen[u] = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        if (x == v) break;
        for (VertexId y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                q.push_back(y);
            }
    }
    if (!seen[v]) throw std::invalid_argument("tree_path: endpoints in different components");
    std::vector<VertexId> path;
    for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace hist
