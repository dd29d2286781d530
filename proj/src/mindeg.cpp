#include "hist/mindeg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace hist {

Thresholds compute_thresholds(int k, int n) {
    if (k < 2) throw std::invalid_argument("compute_thresholds: k must be >= 2");
    if (n < 1) throw std::invalid_argument("compute_thresholds: n must be >= 1");
    Thresholds th;
    th.k = k;
    th.n = n;
    const double kd = k;
    th.c_k = std::sqrt(kd * (kd - 1) * (kd + 2 * std::sqrt(2 * kd) + 2));
    const double rn = std::sqrt(static_cast<double>(n));
    const double c2 = th.c_k * th.c_k;
    th.p = ((c2 - kd * (kd - 1) * (kd - 2)) * rn + kd * th.c_k) / (2 * th.c_k);
    const double denom = th.c_k * rn - th.p + kd;
    th.admissible_bound =
        kd * (kd * th.p * n + 2 * denom * n) / (denom * th.p);
    th.regime_ok = rn > th.c_k;
    return th;
}

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

ConstrainedForest grow_forest(const Graph& g, const Thresholds& th) {
    const int n = g.num_vertices();
    const int k = th.k;
    const double p = th.p;
    std::vector<char> in_forest(n, 0);
    std::vector<int> fdeg(n, 0);
    std::vector<Edge> edges;

    auto add_edge = [&](VertexId a, VertexId b) {
        edges.push_back(make_edge(a, b));
        in_forest[a] = in_forest[b] = 1;
        ++fdeg[a];
        ++fdeg[b];
    };

    auto seed_star = [&](VertexId center) {
        std::vector<VertexId> outs;
        for (VertexId y : g.neighbors(center))
            if (!in_forest[y]) outs.push_back(y);
        // Degree >= k+2 keeps the center out of [2,k+1]; size >= p keeps the
        // component above threshold.
        if (static_cast<double>(outs.size()) >= p &&
            static_cast<int>(outs.size()) >= k + 2) {
            for (VertexId y : outs) add_edge(center, y);
            return true;
        }
        return false;
    };

    // Initial component: closed star at a maximum-degree vertex, if it
    // qualifies on its own.
    if (n > 0) {
        VertexId u0 = 0;
        for (VertexId u = 1; u < n; ++u)
            if (g.degree(u) > g.degree(u0)) u0 = u;
        if (g.degree(u0) >= k + 2 && static_cast<double>(g.degree(u0) + 1) >= p)
            for (VertexId y : g.neighbors(u0)) add_edge(u0, y);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        // (2) leaf-attach: outside vertex adjacent to a heavy forest vertex.
        for (VertexId a = 0; a < n; ++a) {
            if (in_forest[a]) continue;
            for (VertexId w : g.neighbors(a))
                if (in_forest[w] && fdeg[w] >= k + 2) {
                    add_edge(a, w);
                    changed = true;
                    break;
                }
        }
        // (3) leaf-promotion: forest leaf with >= k+1 outside neighbors.
        for (VertexId u = 0; u < n; ++u) {
            if (!in_forest[u] || fdeg[u] != 1) continue;
            std::vector<VertexId> outs;
            for (VertexId y : g.neighbors(u))
                if (!in_forest[y]) outs.push_back(y);
            if (static_cast<int>(outs.size()) >= k + 1) {
                for (VertexId y : outs) add_edge(u, y);
                changed = true;
            }
        }
        // (1) star-seed: new component on an outside vertex.
        for (VertexId a = 0; a < n; ++a)
            if (!in_forest[a] && seed_star(a)) changed = true;
    }

    ConstrainedForest out{TreeEdgeSet(g, edges), std::vector<int>(n, -1), {}};
    Dsu dsu(n);
    for (auto [a, b] : edges) dsu.unite(a, b);
    std::vector<int> comp_id(n, -1);
    for (VertexId v = 0; v < n; ++v) {
        if (!in_forest[v]) continue;
        int root = dsu.find(v);
        if (comp_id[root] == -1) {
            comp_id[root] = static_cast<int>(out.component_size.size());
            out.component_size.push_back(0);
        }
        out.component_of[v] = comp_id[root];
        ++out.component_size[comp_id[root]];
    }
    return out;
}

TreeEdgeSet attach_and_span(const Graph& g, const ConstrainedForest& f) {
    const int n = g.num_vertices();
    std::vector<Edge> edges(f.forest.edges().begin(), f.forest.edges().end());
    // Stragglers attach to their lowest-id forest-leaf neighbor.
    for (VertexId a = 0; a < n; ++a) {
        if (f.component_of[a] != -1) continue;
        VertexId leaf = -1;
        for (VertexId u : g.neighbors(a))
            if (f.component_of[u] != -1 && f.forest.tree_degree(u) == 1) {
                leaf = u;
                break;
            }
        if (leaf == -1)
            throw AttachError(a, "vertex " + std::to_string(a) +
                                     " outside the forest has no leaf neighbor");
        edges.push_back(make_edge(a, leaf));
    }
    // Join the remaining components, lowest-id edges first.
    Dsu dsu(n);
    for (auto [a, b] : edges) dsu.unite(a, b);
    for (auto [a, b] : g.edge_list())
        if (dsu.unite(a, b)) edges.push_back(make_edge(a, b));
    TreeEdgeSet t(g, edges);
    if (!is_spanning_tree(t))
        throw std::invalid_argument("attach_and_span: host graph is disconnected");
    return t;
}

namespace {

// Mutable view of a spanning tree used by the improvement loop.
struct MutableTree {
    std::vector<std::vector<VertexId>> adj;
    std::vector<int> deg;

    explicit MutableTree(const TreeEdgeSet& t)
        : adj(t.host().num_vertices()), deg(t.tree_degrees()) {
        for (auto [a, b] : t.edges()) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    void remove(VertexId a, VertexId b) {
        std::erase(adj[a], b);
        std::erase(adj[b], a);
        --deg[a];
        --deg[b];
    }
    void add(VertexId a, VertexId b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++deg[a];
        ++deg[b];
    }
    std::vector<Edge> edge_list() const {
        std::vector<Edge> out;
        for (VertexId a = 0; a < static_cast<int>(adj.size()); ++a)
            for (VertexId b : adj[a])
                if (a < b) out.emplace_back(a, b);
        return out;
    }
};

}  // namespace

MindegResult improve(const Graph& g, const TreeEdgeSet& t0, const Thresholds& th, int k,
                     std::vector<ImprovementMove>* trace) {
    (void)th;  // admissibility is a derived guarantee, not an input check
    if (!is_spanning_tree(t0)) throw std::invalid_argument("improve: input is not spanning");
    const int n = g.num_vertices();
    MutableTree t(t0);
    std::vector<int> parent(n, -1);
    std::vector<char> tnbr(n, 0);

    const long long iteration_cap = 100LL * n * k + 1000;
    for (long long iter = 0; iter < iteration_cap; ++iter) {
        // Lowest-id vertex of minimal tree-degree s in [2,k].
        int s = k + 1;
        VertexId u = -1;
        for (VertexId v = 0; v < n; ++v)
            if (t.deg[v] >= 2 && t.deg[v] < s) {
                s = t.deg[v];
                u = v;
            }
        if (u == -1 || s > k)
            return {TreeEdgeSet(g, t.edge_list()), std::nullopt};

        // Root the tree at u; the neighbor of v on the u-v tree path is
        // parent[v].
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<VertexId> q{u};
        parent[u] = u;
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            for (VertexId y : t.adj[x])
                if (parent[y] == -1) {
                    parent[y] = x;
                    q.push_back(y);
                }
        }
        for (VertexId y : t.adj[u]) tnbr[y] = 1;

        DegreeClassVector before;
        if (trace) before = class_vector_of_degrees(t.deg, k);

        bool moved = false;
        for (VertexId v : g.neighbors(u)) {
            if (tnbr[v]) continue;
            VertexId w = parent[v];
            int tv = t.deg[w];
            if (tv != s && tv != s + 1) {
                t.remove(v, w);
                t.add(u, v);
                if (trace)
                    trace->push_back({ImprovementMove::Kind::Swap, u, v, w, {}, before,
                                      class_vector_of_degrees(t.deg, k)});
                moved = true;
                break;
            }
            // Z_v = {v} plus the tree-neighbors of w off the u-v path; since
            // v is itself a tree-neighbor of w, Z_v = N_T(w) \ {parent[w]}.
            std::vector<VertexId> z;
            bool in_nu = true;
            for (VertexId x : t.adj[w])
                if (x != parent[w]) {
                    z.push_back(x);
                    if (!g.has_edge(u, x)) {
                        in_nu = false;
                        break;
                    }
                }
            if (in_nu) {
                for (VertexId x : z) {
                    t.remove(w, x);
                    t.add(u, x);
                }
                if (trace)
                    trace->push_back({ImprovementMove::Kind::Shift, u, v, w, z, before,
                                      class_vector_of_degrees(t.deg, k)});
                moved = true;
                break;
            }
        }
        std::fill(tnbr.begin(), tnbr.end(), 0);

        if (!moved)
            return {std::nullopt,
                    Stuck{u, "no swap or shift applies at vertex " + std::to_string(u) +
                                 " of tree-degree " + std::to_string(s)}};
    }
    throw std::logic_error("improve: iteration cap exceeded (lex order violated?)");
}

MindegResult find_2k_st_mindeg(const Graph& g, int k, std::vector<ImprovementMove>* trace) {
    if (!is_connected(g)) throw std::invalid_argument("find_2k_st_mindeg: graph disconnected");
    Thresholds th = compute_thresholds(k, g.num_vertices());
    ConstrainedForest f = grow_forest(g, th);
    TreeEdgeSet t0(g);
    try {
        t0 = attach_and_span(g, f);
    } catch (const AttachError& e) {
        return {std::nullopt, Stuck{e.straggler, e.what()}};
    }
    return improve(g, t0, th, k, trace);
}

}  // namespace hist
