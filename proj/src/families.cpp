#include "hist/families.hpp"

#include "hist/tree.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hist {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty parameter list");
    return out;
}

}  // namespace

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Dn>) os << "dn:" << v.n;
            else if constexpr (std::is_same_v<T, Ahat>) {
                os << "ahat:";
                for (size_t i = 0; i < v.p.size(); ++i) os << (i ? "," : "") << v.p[i];
            } else if constexpr (std::is_same_v<T, Bp>) os << "bp:" << v.p;
            else if constexpr (std::is_same_v<T, Gkd>) os << "gkd:" << v.k << "," << v.d;
            else if constexpr (std::is_same_v<T, Complete>) os << "kn:" << v.n;
            else if constexpr (std::is_same_v<T, CompleteBipartite>) os << "kab:" << v.a << "," << v.b;
            else if constexpr (std::is_same_v<T, Path>) os << "path:" << v.n;
            else os << "cycle:" << v.n;
        },
        variant);
    return os.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family spec needs 'name:params'");
    std::string name = text.substr(0, colon);
    std::vector<int> ps = parse_int_list(text.substr(colon + 1));
    auto expect = [&](size_t count) {
        if (ps.size() != count)
            throw std::invalid_argument("family '" + name + "' expects " +
                                        std::to_string(count) + " parameter(s)");
    };
    if (name == "dn") { expect(1); return {Dn{ps[0]}}; }
    if (name == "ahat") return {Ahat{ps}};
    if (name == "bp") { expect(1); return {Bp{ps[0]}}; }
    if (name == "gkd") { expect(2); return {Gkd{ps[0], ps[1]}}; }
    if (name == "kn") { expect(1); return {Complete{ps[0]}}; }
    if (name == "kab") { expect(2); return {CompleteBipartite{ps[0], ps[1]}}; }
    if (name == "path") { expect(1); return {Path{ps[0]}}; }
    if (name == "cycle") { expect(1); return {Cycle{ps[0]}}; }
    throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

using EdgeVec = std::vector<std::pair<VertexId, VertexId>>;

// Labeling: clique on [0, n-3], pendant mid-vertex n-2 attached to clique
// vertex 0, pendant endpoint n-1 attached to n-2.
Graph build_dn(int n) {
    if (n < 5) throw std::invalid_argument("dn requires n >= 5");
    EdgeVec e;
    for (int u = 0; u + 1 <= n - 3; ++u)
        for (int v = u + 1; v <= n - 3; ++v) e.emplace_back(u, v);
    e.emplace_back(0, n - 2);
    e.emplace_back(n - 2, n - 1);
    return Graph(n, e);
}

// Labeling: hub 0 (the identified x_{i,1}), then x_{1,2}..x_{m,2} as 1..m,
// then the block interiors in block order. Each interior is adjacent to the
// hub and to its block's x_{i,2}; the x_{i,2} form a clique.
Graph build_ahat(const std::vector<int>& p) {
    const int m = static_cast<int>(p.size());
    if (m < 1) throw std::invalid_argument("ahat requires m >= 1");
    for (int pi : p)
        if (pi < 1) throw std::invalid_argument("ahat requires every p_i >= 1");
    int total = 1 + m;
    for (int pi : p) total += pi;
    EdgeVec e;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) e.emplace_back(i, j);
    int next = 1 + m;
    for (int i = 1; i <= m; ++i)
        for (int t = 0; t < p[i - 1]; ++t, ++next) {
            e.emplace_back(0, next);
            e.emplace_back(i, next);
        }
    return Graph(total, e);
}

// Labeling: as build_ahat for Ahat(2, p) (hub 0, x_{1,2}=1, x_{2,2}=2,
// K_{2,2} interiors y=3, y'=4, second-block interiors 5..4+p), plus edge yy'.
Graph build_bp(int p) {
    if (p < 1) throw std::invalid_argument("bp requires p >= 1");
    Graph base = build_ahat({2, p});
    EdgeVec e = base.edge_list();
    e.emplace_back(3, 4);
    return Graph(base.num_vertices(), e);
}

// Labeling: U1 = [0, d), U2 = [d, 2d), then l = d/(k-1) complete blocks of
// size d+1; block i's first vertex v_i is joined to u_i = vertex i-1 of U1.
Graph build_gkd(int k, int d) {
    if (k < 2 || d < 1 || d % (k - 1) != 0)
        throw std::invalid_argument("gkd requires k >= 2, d >= 1 and (k-1) | d");
    const int l = d / (k - 1);
    EdgeVec e;
    for (int u = 0; u < d; ++u)
        for (int v = d; v < 2 * d; ++v) e.emplace_back(u, v);
    int base = 2 * d;
    for (int i = 0; i < l; ++i) {
        for (int a = 0; a < d + 1; ++a)
            for (int b = a + 1; b < d + 1; ++b) e.emplace_back(base + a, base + b);
        e.emplace_back(i, base);  // u_{i+1} -- v_{i+1}
        base += d + 1;
    }
    return Graph(2 * d + l * (d + 1), e);
}

Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("kn requires n >= 1");
    EdgeVec e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("kab requires a,b >= 1");
    EdgeVec e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return Graph(a + b, e);
}

Graph build_path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    EdgeVec e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, e);
}

Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    EdgeVec e;
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph(n, e);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    return std::visit(
        [](const auto& v) -> Graph {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FamilySpec::Dn>) return build_dn(v.n);
            else if constexpr (std::is_same_v<T, FamilySpec::Ahat>) return build_ahat(v.p);
            else if constexpr (std::is_same_v<T, FamilySpec::Bp>) return build_bp(v.p);
            else if constexpr (std::is_same_v<T, FamilySpec::Gkd>) return build_gkd(v.k, v.d);
            else if constexpr (std::is_same_v<T, FamilySpec::Complete>) return build_complete(v.n);
            else if constexpr (std::is_same_v<T, FamilySpec::CompleteBipartite>)
                return build_complete_bipartite(v.a, v.b);
            else if constexpr (std::is_same_v<T, FamilySpec::Path>) return build_path(v.n);
            else return build_cycle(v.n);
        },
        spec.variant);
}

std::optional<int> recognize_Dn(const Graph& g) {
    const int n = g.num_vertices();
    if (n < 5 || !is_connected(g)) return std::nullopt;
    // Exactly one pendant vertex, whose neighbor has degree 2; that
    // neighbor's other neighbor has degree n-2; the other n-2 vertices are a
    // clique.
    std::vector<VertexId> pendant;
    for (VertexId u = 0; u < n; ++u)
        if (g.degree(u) == 1) pendant.push_back(u);
    if (pendant.size() != 1) return std::nullopt;
    VertexId tail = pendant[0];
    VertexId mid = g.neighbors(tail)[0];
    if (g.degree(mid) != 2) return std::nullopt;
    VertexId root = g.neighbors(mid)[0] == tail ? g.neighbors(mid)[1] : g.neighbors(mid)[0];
    if (g.degree(root) != n - 2) return std::nullopt;
    for (VertexId u = 0; u < n; ++u) {
        if (u == tail || u == mid) continue;
        for (VertexId v = u + 1; v < n; ++v) {
            if (v == tail || v == mid) continue;
            if (!g.has_edge(u, v)) return std::nullopt;
        }
    }
    return n;
}

namespace {

// Try h as the hub of an Ahat graph: every neighbor of h must be a degree-2
// interior whose other endpoint is an x_{i,2}; the x's form a clique and
// their neighborhoods close up exactly.
std::optional<ABMembership> try_ahat_hub(const Graph& g, VertexId h) {
    const int n = g.num_vertices();
    std::vector<VertexId> interiors = g.neighbors(h);
    if (interiors.empty()) return std::nullopt;
    std::vector<VertexId> xof(n, -1);  // interior -> its x vertex
    std::set<VertexId> xs;
    for (VertexId v : interiors) {
        if (g.degree(v) != 2) return std::nullopt;
        VertexId x = g.neighbors(v)[0] == h ? g.neighbors(v)[1] : g.neighbors(v)[0];
        if (x == h || g.has_edge(h, x)) return std::nullopt;
        xof[v] = x;
        xs.insert(x);
    }
    if (1 + interiors.size() + xs.size() != static_cast<size_t>(n)) return std::nullopt;
    // Each x's neighborhood must be exactly its interiors plus the other x's.
    std::vector<int> params;
    for (VertexId x : xs) {
        std::set<VertexId> want;
        for (VertexId v : interiors)
            if (xof[v] == x) want.insert(v);
        params.push_back(static_cast<int>(want.size()));
        for (VertexId y : xs)
            if (y != x) want.insert(y);
        const auto& have = g.neighbors(x);
        if (want.size() != have.size() ||
            !std::equal(want.begin(), want.end(), have.begin()))
            return std::nullopt;
    }
    std::sort(params.begin(), params.end());
    return ABMembership{ABMembership::Family::Ahat, params};
}

// Try h as the hub of a B_p graph: N(h) splits into two adjacent degree-3
// vertices y,y' sharing a second endpoint x1, and degree-2 interiors sharing
// an endpoint x2, with x1x2 an edge and all neighborhoods closing up.
std::optional<ABMembership> try_bp_hub(const Graph& g, VertexId h) {
    const int n = g.num_vertices();
    std::vector<VertexId> deg3, deg2;
    for (VertexId v : g.neighbors(h)) {
        if (g.degree(v) == 3) deg3.push_back(v);
        else if (g.degree(v) == 2) deg2.push_back(v);
        else return std::nullopt;
    }
    if (deg3.size() != 2 || deg2.empty()) return std::nullopt;
    VertexId y = deg3[0], yp = deg3[1];
    if (!g.has_edge(y, yp)) return std::nullopt;
    auto third = [&](VertexId v) -> VertexId {
        for (VertexId w : g.neighbors(v))
            if (w != h && w != y && w != yp) return w;
        return -1;
    };
    VertexId x1 = third(y);
    if (x1 == -1 || x1 != third(yp) || g.has_edge(h, x1)) return std::nullopt;
    VertexId x2 = -1;
    for (VertexId v : deg2) {
        VertexId x = g.neighbors(v)[0] == h ? g.neighbors(v)[1] : g.neighbors(v)[0];
        if (x2 == -1) x2 = x;
        if (x != x2) return std::nullopt;
    }
    if (x2 == h || x2 == x1 || g.has_edge(h, x2) || !g.has_edge(x1, x2)) return std::nullopt;
    if (static_cast<size_t>(n) != 3 + deg2.size() + deg3.size()) return std::nullopt;
    // Close up x1 and x2.
    if (g.degree(x1) != 3) return std::nullopt;
    std::set<VertexId> want(deg2.begin(), deg2.end());
    want.insert(x1);
    const auto& have = g.neighbors(x2);
    if (want.size() != have.size() || !std::equal(want.begin(), want.end(), have.begin()))
        return std::nullopt;
    return ABMembership{ABMembership::Family::Bp, {static_cast<int>(deg2.size())}};
}

}  // namespace

std::optional<ABMembership> recognize_AB(const Graph& g) {
    if (g.num_vertices() < 3 || !is_connected(g)) return std::nullopt;
    for (VertexId h = 0; h < g.num_vertices(); ++h) {
        if (auto a = try_ahat_hub(g, h)) return a;
        if (auto b = try_bp_hub(g, h)) return b;
    }
    return std::nullopt;
}

Graph random_graph_min_degree(int n, int delta_target, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (delta_target >= n) throw std::invalid_argument("delta_target must be < n");
    if (delta_target >= n - 1) return build_complete(n);
    std::mt19937_64 rng(seed);
    std::vector<VertexId> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<Edge> edges;
    auto key = [](VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    std::vector<int> deg(n, 0);
    auto add = [&](VertexId a, VertexId b) {
        if (a == b) return false;
        if (!edges.insert(key(a, b)).second) return false;
        ++deg[a];
        ++deg[b];
        return true;
    };
    // Random cycle (or path at n = 2) for connectivity, then repair degrees.
    for (int i = 0; i + 1 < n; ++i) add(perm[i], perm[i + 1]);
    if (n >= 3) add(perm[n - 1], perm[0]);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (VertexId u = 0; u < n; ++u)
        while (deg[u] < delta_target) {
            VertexId v = pick(rng);
            add(u, v);
        }
    return Graph(n, {edges.begin(), edges.end()});
}

Graph random_graph_sigma2(int n, int sigma2_target, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("n must be >= 3");
    if (sigma2_target > 2 * (n - 2)) return build_complete(n);
    std::mt19937_64 rng(seed);
    const int kMaxAttempts = 10000;
    std::set<Edge> edges;
    std::vector<int> deg(n, 0);
    auto key = [](VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    auto add = [&](VertexId a, VertexId b) {
        if (a == b) return false;
        if (!edges.insert(key(a, b)).second) return false;
        ++deg[a];
        ++deg[b];
        return true;
    };
    // Base: random recursive tree plus a sprinkling of extra edges.
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (VertexId u = 1; u < n; ++u) add(u, std::uniform_int_distribution<int>(0, u - 1)(rng));
    for (int t = 0; t < n; ++t) add(pick(rng), pick(rng));
    // Repair: boost the lighter endpoint of the worst non-adjacent pair.
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        VertexId bu = -1, bv = -1;
        int worst = -1;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (!edges.count({u, v})) {
                    int s = deg[u] + deg[v];
                    if (worst < 0 || s < worst) {
                        worst = s;
                        bu = u;
                        bv = v;
                    }
                }
        if (bu == -1 || worst >= sigma2_target)
            return Graph(n, {edges.begin(), edges.end()});
        VertexId light = deg[bu] <= deg[bv] ? bu : bv;
        for (int tries = 0; tries < 4 * n; ++tries)
            if (add(light, pick(rng))) break;
    }
    throw std::runtime_error("random_graph_sigma2: retry cap exhausted");
}

}  // namespace hist
