#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hist {

/// Outcome of one audit sweep. Failures carry the instance key (seed or
/// family spec) needed to regenerate the instance exactly.
struct AuditReport {
    std::string suite;
    int instances = 0;
    int successes = 0;
    std::vector<std::string> failures;
    double wall_seconds = 0;

    bool ok() const { return failures.empty() && instances == successes; }
    std::string summary() const;
};

struct AuditOptions {
    uint64_t seed = 20240517;  // documented default; CI runs are reproducible
    int nmax = 7;              // oracle cross-check size cap
    int thm2_instances = 500;
    uint64_t budget_nodes = 400'000'000;
};

/// Threshold chain: c_k sqrt(n) > p > k+2 over a (k, n) grid.
AuditReport audit_claim11(const AuditOptions& opt = {});

/// Constructive sweep under the minimum-degree hypothesis, with per-move
/// bookkeeping checks.
AuditReport audit_thm1(const AuditOptions& opt = {});

/// Degree-sum sweep (random graphs with sigma2 >= n-2) plus the sharpness
/// side: the pendant-clique exception has sigma2 = n-2 and no valid tree.
AuditReport audit_thm2(const AuditOptions& opt = {});

/// The lower-bound family admits no [2,k]-ST (exact solver, fixed grid).
AuditReport audit_prop_gkd(const AuditOptions& opt = {});

/// Diameter-2 exceptional families of order 10-13: recognizer round-trips
/// and exact-solver non-existence.
AuditReport audit_thmC_families(const AuditOptions& opt = {});

/// Branch-and-bound solver agrees with the brute-force enumeration oracle
/// on small connected graphs, k in {2,3}.
AuditReport audit_oracle_xcheck(const AuditOptions& opt = {});

/// Dispatch by suite name in {claim11, thm1, thm2, prop-gkd, thmC-families,
/// oracle-xcheck}; throws on unknown names.
AuditReport run_audit(const std::string& suite, const AuditOptions& opt = {});

/// Runs fn(i) for i in [0, count) on up to HIST_FORGE_THREADS workers
/// (default: hardware concurrency). fn must be thread-safe.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace hist
