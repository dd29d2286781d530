#include "hist/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "hist/families.hpp"
#include "hist/graph.hpp"
#include "hist/mindeg.hpp"
#include "hist/sigma2.hpp"
#include "hist/solver.hpp"
#include "hist/tree.hpp"

namespace hist {

std::string AuditReport::summary() const {
    std::ostringstream os;
    os << suite << ": " << successes << "/" << instances << " ok";
    if (!failures.empty()) os << ", " << failures.size() << " FAILED";
    os << " (" << wall_seconds << " s)";
    return os.str();
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* env = std::getenv("HIST_FORGE_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max(count, 1)));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(suite);
    }
    // Thread-safe; failures are sorted by key before emission.
    void record(const std::string& key, bool pass, const std::string& detail = "") {
        std::lock_guard<std::mutex> lk(mu_);
        ++report_.instances;
        if (pass) ++report_.successes;
        else report_.failures.push_back(key + (detail.empty() ? "" : ": " + detail));
    }
    AuditReport finish() {
        std::sort(report_.failures.begin(), report_.failures.end());
        report_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return report_;
    }

private:
    std::mutex mu_;
    AuditReport report_;
    std::chrono::steady_clock::time_point start_;
};

std::string run_guarded(const std::function<void()>& body) {
    try {
        body();
        return "";
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

}  // namespace

AuditReport audit_claim11(const AuditOptions&) {
    Recorder rec("claim11");
    for (int k = 2; k <= 8; ++k) {
        double ck = compute_thresholds(k, 1).c_k;
        int n0 = static_cast<int>(std::ceil(ck * ck)) + 1;
        for (int j = 1; j <= 20; ++j) {
            int n = n0 + j * j * 3 + 7 * j;  // 20 orders with sqrt(n) > c_k
            Thresholds th = compute_thresholds(k, n);
            std::ostringstream key;
            key << "claim11 k=" << k << " n=" << n;
            double lhs = th.min_degree_bound();
            bool pass = th.regime_ok &&
                        lhs - th.p > -1e-9 * std::max(1.0, lhs) &&
                        th.p - (k + 2) > -1e-9 * std::max(1.0, th.p);
            rec.record(key.str(), pass);
        }
    }
    return rec.finish();
}

AuditReport audit_thm1(const AuditOptions& opt) {
    Recorder rec("thm1");
    struct Job {
        int n, k, idx;
    };
    std::vector<Job> jobs;
    for (int i = 0; i < 20; ++i) jobs.push_back({2000, 2, i});
    for (int i = 0; i < 10; ++i) jobs.push_back({500, 3, i});
    parallel_for(static_cast<int>(jobs.size()), [&](int j) {
        const Job& job = jobs[j];
        Thresholds th = compute_thresholds(job.k, job.n);
        int delta = static_cast<int>(std::ceil(th.min_degree_bound()));
        uint64_t seed = opt.seed + 7919ull * job.k + job.idx;
        std::ostringstream key;
        key << "thm1 n=" << job.n << " k=" << job.k << " seed=" << seed;
        std::string err = run_guarded([&] {
            Graph g = random_graph_min_degree(job.n, delta, seed);
            if (degree_stats(g).delta < delta) throw std::runtime_error("generator broke delta");
            std::vector<ImprovementMove> trace;
            MindegResult r = find_2k_st_mindeg(g, job.k, &trace);
            if (!r.ok()) throw std::runtime_error("stuck: " + r.stuck->reason);
            if (!is_2k_st(*r.tree, job.k)) throw std::runtime_error("result not a [2,k]-ST");
            for (const auto& mv : trace) {
                if (!lex_less(mv.after, mv.before))
                    throw std::runtime_error("move did not lex-decrease");
                if (mv.after.mu > mv.before.mu) throw std::runtime_error("move increased mu");
            }
        });
        rec.record(key.str(), err.empty(), err);
    });
    return rec.finish();
}

AuditReport audit_thm2(const AuditOptions& opt) {
    Recorder rec("thm2");
    // Sharpness side: the pendant-clique exception at sigma2 = n-2.
    for (int n = 10; n <= 14; ++n) {
        std::ostringstream key;
        key << "thm2 sharpness dn:" << n;
        std::string err = run_guarded([&] {
            Graph g = generate(FamilySpec{FamilySpec::Dn{n}});
            DegreeStats st = degree_stats(g);
            if (!st.sigma2 || *st.sigma2 != n - 2) throw std::runtime_error("sigma2 != n-2");
            SearchVerdict v = solve_2k_st(g, 2, SearchBudget(opt.budget_nodes));
            if (v.found())
                throw std::runtime_error("solver found a tree on the exception graph");
            if (!v.not_exists()) throw std::runtime_error("solver budget exhausted");
            if (!find_hist_sigma2(g).is_dn) throw std::runtime_error("exception not recognized");
        });
        rec.record(key.str(), err.empty(), err);
    }
    // Random sweep, with an exact-solver cross-check on a subsample.
    parallel_for(opt.thm2_instances, [&](int i) {
        int n = 10 + (i % 5);
        uint64_t seed = opt.seed * 1009 + i;
        std::ostringstream key;
        key << "thm2 n=" << n << " seed=" << seed;
        std::string err = run_guarded([&] {
            Graph g = random_graph_sigma2(n, n - 2, seed);
            for (int bump = 1; recognize_Dn(g) && bump <= 32; ++bump)
                g = random_graph_sigma2(n, n - 2, seed + 100000ull * bump);
            if (recognize_Dn(g)) throw std::runtime_error("could not avoid the exception graph");
            Sigma2Result r = find_hist_sigma2(g);
            if (!r.ok()) throw std::runtime_error("construction failed");
            if (!is_2k_st(*r.tree, 2)) throw std::runtime_error("result has a degree-2 vertex");
            if (i % 10 == 0 && !solve_2k_st(g, 2, SearchBudget(opt.budget_nodes)).found())
                throw std::runtime_error("exact solver disagrees");
        });
        rec.record(key.str(), err.empty(), err);
    });
    return rec.finish();
}

AuditReport audit_prop_gkd(const AuditOptions& opt) {
    Recorder rec("prop-gkd");
    const std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 4}, {3, 2}, {3, 4}, {4, 3}};
    parallel_for(static_cast<int>(grid.size()), [&](int i) {
        auto [k, d] = grid[i];
        std::ostringstream key;
        key << "prop-gkd gkd:" << k << "," << d;
        std::string err = run_guarded([&] {
            Graph g = generate(FamilySpec{FamilySpec::Gkd{k, d}});
            if (degree_stats(g).delta != d) throw std::runtime_error("delta != d");
            int expect_n = 2 * d + d * (d + 1) / (k - 1);
            if (g.num_vertices() != expect_n) throw std::runtime_error("order mismatch");
            SearchVerdict v = solve_2k_st(g, k, SearchBudget(opt.budget_nodes));
            if (v.found()) throw std::runtime_error("solver found a [2,k]-ST");
            if (!v.not_exists()) throw std::runtime_error("budget exhausted");
        });
        rec.record(key.str(), err.empty(), err);
    });
    return rec.finish();
}

namespace {

// Non-increasing compositions of `total` into exactly `parts` positive
// integers, each at most `maxp`.
void partitions_into(int total, int parts, int maxp,
                     std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int v = std::min(total - (parts - 1), maxp); v >= 1; --v) {
        cur.push_back(v);
        partitions_into(total - v, parts - 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

AuditReport audit_thmC_families(const AuditOptions& opt) {
    Recorder rec("thmC-families");
    std::vector<FamilySpec> specs;
    for (int order = 10; order <= 13; ++order) {
        for (int m = 1; 1 + m + m <= order; ++m) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions_into(order - 1 - m, m, order, cur, parts);
            for (auto& p : parts) specs.push_back(FamilySpec{FamilySpec::Ahat{p}});
        }
        specs.push_back(FamilySpec{FamilySpec::Bp{order - 5}});
    }
    parallel_for(static_cast<int>(specs.size()), [&](int i) {
        const FamilySpec& spec = specs[i];
        std::string key = "thmC " + spec.to_string();
        std::string err = run_guarded([&] {
            Graph g = generate(spec);
            auto ab = recognize_AB(g);
            if (!ab) throw std::runtime_error("recognizer missed the family");
            if (const auto* ah = std::get_if<FamilySpec::Ahat>(&spec.variant)) {
                std::vector<int> want = ah->p;
                std::sort(want.begin(), want.end());
                if (ab->family != ABMembership::Family::Ahat || ab->params != want)
                    throw std::runtime_error("round-trip mismatch");
            } else {
                int p = std::get<FamilySpec::Bp>(spec.variant).p;
                if (ab->family != ABMembership::Family::Bp || ab->params != std::vector<int>{p})
                    throw std::runtime_error("round-trip mismatch");
            }
            DegreeStats st = degree_stats(g);
            if (!st.sigma2 || *st.sigma2 != 4) throw std::runtime_error("sigma2 != 4");
            SearchVerdict v = solve_2k_st(g, 2, SearchBudget(opt.budget_nodes));
            if (!v.not_exists()) throw std::runtime_error("expected non-existence");
        });
        rec.record(key, err.empty(), err);
    });
    return rec.finish();
}

AuditReport audit_oracle_xcheck(const AuditOptions& opt) {
    Recorder rec("oracle-xcheck");
    const int cap = 50'000;
    for (int n = 2; n <= std::min(opt.nmax, 9); ++n) {
        const int bits = n * (n - 1) / 2;
        std::vector<std::pair<VertexId, VertexId>> all_edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        std::vector<uint64_t> masks;
        if (bits <= 62 && (1ull << bits) <= static_cast<uint64_t>(cap)) {
            for (uint64_t m = 0; m < (1ull << bits); ++m) masks.push_back(m);
        } else {
            std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ull * n));
            std::uniform_int_distribution<uint64_t> dist(0, (1ull << bits) - 1);
            masks.reserve(cap);
            for (int i = 0; i < cap; ++i) masks.push_back(dist(rng));
        }
        std::atomic<int> tested{0};
        std::atomic<int> bad{0};
        std::mutex mu;
        std::vector<std::string> fails;
        parallel_for(static_cast<int>(masks.size()), [&](int mi) {
            uint64_t mask = masks[mi];
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (int b = 0; b < bits; ++b)
                if ((mask >> b) & 1) edges.push_back(all_edges[b]);
            Graph g(n, edges);
            if (!is_connected(g)) return;
            for (int k : {2, 3}) {
                tested.fetch_add(1);
                SearchVerdict a = solve_2k_st(g, k, SearchBudget(opt.budget_nodes));
                SearchVerdict b = oracle_enumerate(g, k);
                bool ok = a.outcome == b.outcome &&
                          (!a.found() || (is_spanning_tree(*a.tree) && is_2k_st(*a.tree, k))) &&
                          (!b.found() || (is_spanning_tree(*b.tree) && is_2k_st(*b.tree, k)));
                if (!ok) {
                    bad.fetch_add(1);
                    std::lock_guard<std::mutex> lk(mu);
                    if (fails.size() < 20) {
                        std::ostringstream os;
                        os << "oracle-xcheck n=" << n << " mask=" << mask << " k=" << k;
                        fails.push_back(os.str());
                    }
                }
            }
        });
        std::ostringstream key;
        key << "oracle-xcheck n=" << n << " (" << tested.load() << " checks)";
        rec.record(key.str(), bad.load() == 0,
                   fails.empty() ? "" : fails.front() + " (and others)");
    }
    return rec.finish();
}

AuditReport run_audit(const std::string& suite, const AuditOptions& opt) {
    if (suite == "claim11") return audit_claim11(opt);
    if (suite == "thm1") return audit_thm1(opt);
    if (suite == "thm2") return audit_thm2(opt);
    if (suite == "prop-gkd") return audit_prop_gkd(opt);
    if (suite == "thmC-families") return audit_thmC_families(opt);
    if (suite == "oracle-xcheck") return audit_oracle_xcheck(opt);
    throw std::invalid_argument("unknown audit suite '" + suite + "'");
}

}  // namespace hist
