// Acceptance suite: nine end-to-end criteria, one pass/fail line each.
// Criteria 6-9 share one seeded 500-instance corpus. Exit status 0 only if
// every criterion holds, including the wall-clock budgets.

#include <cstdio>

#include "rrsgp/verify.hpp"

using namespace rrsgp;

namespace {

int failures = 0;

void report(int idx, const char* title, CheckResult res, double budget_ms = 0) {
    if (budget_ms > 0 && res.ms >= budget_ms)
        res.fail("runtime " + std::to_string(res.ms) + " ms exceeds budget " + std::to_string(budget_ms) + " ms");
    if (!res.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n", res.pass ? "PASS" : "FAIL", idx, title, res.ms,
                res.detail.empty() ? "" : " -- ", res.detail.c_str());
    std::fflush(stdout);
}

} // namespace

int main() {
    report(1, "pipeline for <6,9,11>, E={9,11}: sets, tables, arrays, r, h", check_pipeline_6_9_11(), 1000);
    report(2, "pipeline for <4,5,11>, E=M: powers, closure, flags, h=r", check_pipeline_4_5_11(), 1000);
    report(3, "pipeline for <4,5,6>, E={9,11}: stable case with closure gap", check_pipeline_4_5_6());
    report(4, "family n=3..8: r=n-1, h=1 both ways, generator relation", check_family_sweep(3, 8), 30000);
    report(5, "pipeline for <4,5,7>, E={7,8}: conductor criterion, h=r", check_pipeline_4_5_7());

    InstanceParams params; // 500 instances, seed 42, multiplicity <= 12, generators < 60
    const auto corpus = make_corpus(params);

    report(6, "three-way closure agreement on the seeded corpus", check_three_way_closures(corpus), 300000);
    report(7, "pullback h=1 test vs direct h on the corpus", check_pullback_vs_direct_h(corpus));
    report(8, "invariant battery on the corpus", check_invariant_battery(corpus));
    report(9, "oracle window agreement on the corpus", check_oracle_windows(corpus));

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
