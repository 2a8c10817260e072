// Randomized cross-checks at unit-test scale; the acceptance binary runs the
// same battery over the full 500-instance corpus.

#include <doctest.h>

#include "rrsgp/verify.hpp"

using namespace rrsgp;

namespace {
InstanceParams small_params() {
    InstanceParams p;
    p.count = 40;
    p.seed = 42;
    return p;
}
} // namespace

TEST_CASE("worked pipelines") {
    for (auto check : {check_pipeline_6_9_11, check_pipeline_4_5_11, check_pipeline_4_5_6, check_pipeline_4_5_7}) {
        const CheckResult res = check();
        INFO(res.name, ": ", res.detail);
        CHECK(res.pass);
    }
}

TEST_CASE("family sweep (small)") {
    const CheckResult res = check_family_sweep(3, 5);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("three-way closure agreement (small corpus)") {
    const CheckResult res = check_three_way_closures(make_corpus(small_params()));
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("pullback h test vs direct h (small corpus)") {
    const CheckResult res = check_pullback_vs_direct_h(make_corpus(small_params()));
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("invariant battery (small corpus)") {
    const CheckResult res = check_invariant_battery(make_corpus(small_params()));
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("oracle window agreement (small corpus)") {
    const CheckResult res = check_oracle_windows(make_corpus(small_params()));
    INFO(res.detail);
    CHECK(res.pass);
}
