#include "hist/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace hist {

Graph::Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
    words_ = static_cast<size_t>((n + 63) / 64);
    bits_.assign(static_cast<size_t>(n) * words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) continue;  // dedupe
        bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] |= 1ull << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u >> 6)] |= 1ull << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats st;
    const int n = g.num_vertices();
    st.delta = n > 0 ? g.degree(0) : 0;
    for (VertexId u = 0; u < n; ++u) {
        st.delta = std::min(st.delta, g.degree(u));
        st.classes[g.degree(u)].push_back(u);
    }
    if (!g.is_complete()) {
        int best = -1;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) {
                    int s = g.degree(u) + g.degree(v);
                    if (best < 0 || s < best) best = s;
                }
        st.sigma2 = best;
    }
    return st;
}

namespace {

// Single-source BFS; returns distance array with kUnreachable for unseen.
std::vector<int> bfs(const Graph& g, VertexId src) {
    std::vector<int> dist(g.num_vertices(), kUnreachable);
    std::deque<VertexId> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : g.neighbors(u))
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

}  // namespace

int distance(const Graph& g, VertexId u, VertexId v) {
    if (u < 0 || u >= g.num_vertices() || v < 0 || v >= g.num_vertices())
        throw std::invalid_argument("distance: vertex out of range");
    return bfs(g, u)[v];
}

int diameter(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return 0;
    int d = 0;
    for (VertexId u = 0; u < n; ++u) {
        auto dist = bfs(g, u);
        for (int x : dist) {
            if (x == kUnreachable) return kUnreachable;
            d = std::max(d, x);
        }
    }
    return d;
}

int num_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::deque<VertexId> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (VertexId v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
        }
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || num_components(g) == 1;
}

std::vector<std::vector<VertexId>> diametral_paths(const Graph& g) {
    const int n = g.num_vertices();
    if (!is_connected(g)) throw std::invalid_argument("diametral_paths: disconnected graph");
    std::vector<std::vector<int>> dist(n);
    int d = 0;
    for (VertexId u = 0; u < n; ++u) {
        dist[u] = bfs(g, u);
        for (int x : dist[u]) d = std::max(d, x);
    }
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    // DFS down the BFS dag from u toward v, neighbors in ascending order.
    auto extend = [&](auto&& self, VertexId cur, VertexId target) -> void {
        path.push_back(cur);
        if (cur == target) {
            out.push_back(path);
        } else {
            for (VertexId w : g.neighbors(cur))
                if (dist[target][w] == dist[target][cur] - 1) self(self, w, target);
        }
        path.pop_back();
    };
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && dist[u][v] == d) extend(extend, u, v);
    return out;
}

}  // namespace hist
