#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ca/report.hpp"

namespace ca {

/// Worker count for case fan-out: the CA_WORKERS environment variable when set
/// to a positive integer, otherwise the hardware concurrency (at least 1).
int worker_count();

/// One independently runnable case: id plus a closure producing pass/detail.
struct CaseJob {
    std::string id;
    std::function<std::pair<bool, std::string>()> run;
};

/// Runs the jobs across worker_count() threads. The report lists results in
/// the original job order regardless of scheduling, so output is stable.
Report run_cases(const std::string& suite, const std::vector<CaseJob>& jobs);

/// Aggregated lemma verification for the theta families on Q_m: membership
/// and first-order form of theta_t(g), the layered product formula, the
/// annihilation bound, the substitution formula, the reparametrization rank
/// and, in the square case, a nonvanishing determinant witness.
Report appendix_suite(int k, int m, int beta_max);

}  // namespace ca
