#include "hist/solver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace hist {

namespace {

// BFS order from the lowest-id maximum-degree vertex; neighbors ascending.
std::vector<int> bfs_vertex_rank(const Graph& g) {
    const int n = g.num_vertices();
    VertexId root = 0;
    for (VertexId u = 1; u < n; ++u)
        if (g.degree(u) > g.degree(root)) root = u;
    std::vector<int> rank(n, -1);
    int next = 0;
    std::deque<VertexId> q{root};
    rank[root] = next++;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : g.neighbors(u))
            if (rank[v] == -1) {
                rank[v] = next++;
                q.push_back(v);
            }
    }
    return rank;
}

// Iterative lowlink DFS. Simple graph assumed (one parent edge to skip).
std::vector<Edge> find_bridges(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> bridges;
    int timer = 0;
    struct Frame {
        VertexId u, parent;
        size_t i;
    };
    std::vector<Frame> st;
    for (VertexId s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        disc[s] = low[s] = timer++;
        st.push_back({s, -1, 0});
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < g.neighbors(f.u).size()) {
                VertexId w = g.neighbors(f.u)[f.i++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    st.push_back({w, f.u, 0});
                } else {
                    low[f.u] = std::min(low[f.u], disc[w]);
                }
            } else {
                VertexId u = f.u, p = f.parent;
                st.pop_back();
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) bridges.push_back(make_edge(p, u));
                }
            }
        }
    }
    return bridges;
}

struct RollbackDsu {
    std::vector<int> parent, size;
    std::vector<int> trail;  // roots absorbed, for undo

    explicit RollbackDsu(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];  // no path compression (rollback)
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] > size[b]) std::swap(a, b);
        parent[a] = b;
        size[b] += size[a];
        trail.push_back(a);
        return true;
    }
    size_t mark() const { return trail.size(); }
    void rollback(size_t m) {
        while (trail.size() > m) {
            int a = trail.back();
            trail.pop_back();
            size[parent[a]] -= size[a];
            parent[a] = a;
        }
    }
};

class TwoKSearch {
public:
    TwoKSearch(const Graph& g, int k, const SearchBudget& budget)
        : g_(g), k_(k), budget_(budget), n_(g.num_vertices()), dsu_(n_) {
        auto rank = bfs_vertex_rank(g);
        edges_ = g.edge_list();
        std::sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
            auto ka = std::minmax(rank[a.first], rank[a.second]);
            auto kb = std::minmax(rank[b.first], rank[b.second]);
            return ka != kb ? ka < kb : a < b;
        });
        // Bridges belong to every spanning tree; front-load them so run()
        // can commit them before branching.
        auto bridges = find_bridges(g);
        std::set<Edge> bset(bridges.begin(), bridges.end());
        nb_ = static_cast<int>(
            std::stable_partition(edges_.begin(), edges_.end(),
                                  [&](const Edge& e) { return bset.count(e) > 0; }) -
            edges_.begin());
        m_ = static_cast<int>(edges_.size());
        state_.assign(m_, Undecided);
        indeg_.assign(n_, 0);
        undec_.assign(n_, 0);
        inc_.resize(n_);
        for (int e = 0; e < m_; ++e) {
            auto [u, v] = edges_[e];
            inc_[u].push_back(e);
            inc_[v].push_back(e);
            ++undec_[u];
            ++undec_[v];
        }
        sum_lb_ = n_;  // every vertex must end with degree >= 1
    }

    SearchVerdict run() {
        if (n_ == 1) {
            return {SearchVerdict::Outcome::Found, TreeEdgeSet(g_), 0};
        }
        if (!is_connected(g_)) return {SearchVerdict::Outcome::NotExists, std::nullopt, 0};
        for (int e = 0; e < nb_; ++e) {
            auto [u, v] = edges_[e];
            dsu_.unite(u, v);
            sum_lb_ += lb(indeg_[u] + 1) - lb(indeg_[u]);
            sum_lb_ += lb(indeg_[v] + 1) - lb(indeg_[v]);
            ++indeg_[u];
            ++indeg_[v];
            --undec_[u];
            --undec_[v];
            state_[e] = Included;
        }
        bool viable = sum_lb_ <= 2LL * (n_ - 1);
        for (VertexId v = 0; viable && v < n_; ++v) viable = feasible(v);
        bool exhausted = viable ? recurse(nb_, nb_) : true;
        if (found_) return {SearchVerdict::Outcome::Found, TreeEdgeSet(g_, chosen_), nodes_};
        if (exhausted) return {SearchVerdict::Outcome::NotExists, std::nullopt, nodes_};
        return {SearchVerdict::Outcome::BudgetExceeded, std::nullopt, nodes_};
    }

private:
    enum EdgeState : uint8_t { Undecided, Included, Excluded };

    // Final tree-degree of v must land in {1} union [k+1, inf).
    bool feasible(VertexId v) const {
        int lo = indeg_[v], hi = indeg_[v] + undec_[v];
        if (hi < 1) return false;
        if (lo <= 1) return true;       // can still stop at 1 (or is 0/1 now)
        return lo >= k_ + 1 || hi >= k_ + 1;
    }

    long long lb(int indeg) const {
        return indeg <= 1 ? 1 : std::max<long long>(indeg, k_ + 1);
    }

    // Is the graph of non-excluded edges connected?
    bool alive_connected() const {
        std::vector<char> seen(n_, 0);
        std::deque<VertexId> q{0};
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (int e : inc_[u]) {
                if (state_[e] == Excluded) continue;
                VertexId w = edges_[e].first == u ? edges_[e].second : edges_[e].first;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push_back(w);
                }
            }
        }
        return cnt == n_;
    }

    // Returns true when the subtree below was searched exhaustively.
    bool recurse(int idx, int included) {
        if (found_) return true;
        if (++nodes_ > budget_.max_nodes) return false;
        if (included == n_ - 1) {
            // Acyclic (DSU-checked) with n-1 edges: spanning tree. Degrees
            // were kept feasible along the way, but leftover undecided edges
            // must be droppable; re-check final degrees directly.
            for (VertexId v = 0; v < n_; ++v) {
                int d = indeg_[v];
                if (d < 1 || (d >= 2 && d <= k_)) return true;
            }
            found_ = true;
            chosen_.clear();
            for (int e = 0; e < m_; ++e)
                if (state_[e] == Included) chosen_.push_back(edges_[e]);
            return true;
        }
        if (idx == m_) return true;
        if (included + (m_ - idx) < n_ - 1) return true;  // too few edges left

        auto [u, v] = edges_[idx];
        bool exhausted = true;

        // Branch 1: include, unless it closes a cycle.
        if (included < n_ - 1 && dsu_.find(u) != dsu_.find(v)) {
            size_t m = dsu_.mark();
            dsu_.unite(u, v);
            sum_lb_ += lb(indeg_[u] + 1) - lb(indeg_[u]);
            sum_lb_ += lb(indeg_[v] + 1) - lb(indeg_[v]);
            ++indeg_[u];
            ++indeg_[v];
            --undec_[u];
            --undec_[v];
            state_[idx] = Included;
            if (sum_lb_ <= 2LL * (n_ - 1) && feasible(u) && feasible(v))
                exhausted = recurse(idx + 1, included + 1) && exhausted;
            state_[idx] = Undecided;
            ++undec_[u];
            ++undec_[v];
            --indeg_[u];
            --indeg_[v];
            sum_lb_ -= lb(indeg_[u] + 1) - lb(indeg_[u]);
            sum_lb_ -= lb(indeg_[v] + 1) - lb(indeg_[v]);
            dsu_.rollback(m);
            if (found_) return exhausted;
        }

        // Branch 2: exclude.
        --undec_[u];
        --undec_[v];
        state_[idx] = Excluded;
        if (feasible(u) && feasible(v) && alive_connected())
            exhausted = recurse(idx + 1, included) && exhausted;
        state_[idx] = Undecided;
        ++undec_[u];
        ++undec_[v];
        return exhausted;
    }

    const Graph& g_;
    int k_;
    SearchBudget budget_;
    int n_;
    int m_ = 0;
    int nb_ = 0;  // bridge count; edges_[0..nb_) are forced
    RollbackDsu dsu_;
    std::vector<Edge> edges_;
    std::vector<EdgeState> state_;
    std::vector<int> indeg_, undec_;
    std::vector<std::vector<int>> inc_;
    long long sum_lb_ = 0;
    uint64_t nodes_ = 0;
    bool found_ = false;
    std::vector<Edge> chosen_;
};

}  // namespace

SearchVerdict solve_2k_st(const Graph& g, int k, const SearchBudget& budget) {
    if (k < 2) throw std::invalid_argument("solve_2k_st: k must be >= 2");
    return TwoKSearch(g, k, budget).run();
}

namespace {

// Plain spanning-tree enumeration (delete/contract over the edge list with
// only cycle and connectivity pruning), testing each complete tree.
class Enumerator {
public:
    Enumerator(const Graph& g, int k) : g_(g), k_(k), n_(g.num_vertices()), dsu_(n_) {
        edges_ = g.edge_list();
        m_ = static_cast<int>(edges_.size());
        alive_.assign(m_, 1);
        deg_.assign(n_, 0);
        inc_.resize(n_);
        for (int e = 0; e < m_; ++e) {
            inc_[edges_[e].first].push_back(e);
            inc_[edges_[e].second].push_back(e);
        }
    }

    SearchVerdict run() {
        if (n_ == 1) return {SearchVerdict::Outcome::Found, TreeEdgeSet(g_), 0};
        if (!is_connected(g_)) return {SearchVerdict::Outcome::NotExists, std::nullopt, 0};
        recurse(0, 0);
        if (found_) return {SearchVerdict::Outcome::Found, TreeEdgeSet(g_, chosen_), trees_};
        return {SearchVerdict::Outcome::NotExists, std::nullopt, trees_};
    }

private:
    bool alive_connected() const {
        std::vector<char> seen(n_, 0);
        std::deque<VertexId> q{0};
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (int e : inc_[u]) {
                if (!alive_[e]) continue;
                VertexId w = edges_[e].first == u ? edges_[e].second : edges_[e].first;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push_back(w);
                }
            }
        }
        return cnt == n_;
    }

    void recurse(int idx, int taken) {
        if (found_) return;
        if (taken == n_ - 1) {
            ++trees_;
            for (VertexId v = 0; v < n_; ++v)
                if (deg_[v] >= 2 && deg_[v] <= k_) return;
            found_ = true;
            chosen_ = current_;
            return;
        }
        if (idx == m_ || taken + (m_ - idx) < n_ - 1) return;
        auto [u, v] = edges_[idx];

        if (dsu_.find(u) != dsu_.find(v)) {
            size_t mark = dsu_.mark();
            dsu_.unite(u, v);
            ++deg_[u];
            ++deg_[v];
            current_.push_back(edges_[idx]);
            recurse(idx + 1, taken + 1);
            current_.pop_back();
            --deg_[u];
            --deg_[v];
            dsu_.rollback(mark);
            if (found_) return;
        }

        alive_[idx] = 0;
        if (alive_connected()) recurse(idx + 1, taken);
        alive_[idx] = 1;
    }

    const Graph& g_;
    int k_;
    int n_;
    int m_ = 0;
    RollbackDsu dsu_;
    std::vector<Edge> edges_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    std::vector<std::vector<int>> inc_;
    std::vector<Edge> current_, chosen_;
    uint64_t trees_ = 0;
    bool found_ = false;
};

}  // namespace

SearchVerdict oracle_enumerate(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("oracle_enumerate: k must be >= 2");
    if (g.num_vertices() > 9)
        throw std::invalid_argument("oracle_enumerate: n <= 9 enforced");
    return Enumerator(g, k).run();
}

}  // namespace hist
