#include <doctest.h>

#include "rrsgp/cm.hpp"
#include "rrsgp/family.hpp"

using namespace rrsgp;

namespace {
RelativeIdeal make(const std::vector<Int>& sgens, const std::vector<Int>& igens) {
    return RelativeIdeal(NumericalSemigroup::from_generators(sgens), igens);
}
} // namespace

TEST_CASE("semigroup microinvariants") {
    const auto two_three = micro_semigroup(NumericalSemigroup::from_generators({2, 3}));
    CHECK(two_three.a == std::vector<Int>({0, 1}));
    CHECK(two_three.a == two_three.b);
    CHECK(two_three.cm());

    const auto m4511 = micro_semigroup(NumericalSemigroup::from_generators({4, 5, 11}));
    CHECK(m4511.apery.entries == std::vector<Int>({0, 5, 10, 11}));
    CHECK(m4511.a == std::vector<Int>({0, 1, 2, 2}));
    CHECK(m4511.b == std::vector<Int>({0, 1, 2, 1}));
    CHECK(!m4511.cm());

    const auto nat = micro_semigroup(NumericalSemigroup::from_generators({1}));
    CHECK(nat.a == std::vector<Int>({0}));
    CHECK(nat.b == std::vector<Int>({0}));
}

TEST_CASE("graded ring verdicts") {
    CHECK(graded_ring_is_cm(NumericalSemigroup::from_generators({2, 3})));
    CHECK(graded_ring_is_cm(NumericalSemigroup::from_generators({4, 5, 6})));
    CHECK(graded_ring_is_cm(NumericalSemigroup::from_generators({6, 9, 11})));
    CHECK(!graded_ring_is_cm(NumericalSemigroup::from_generators({4, 5, 11})));
}

TEST_CASE("ideal microinvariants match the worked pullback") {
    const auto t = NumericalSemigroup::from_generators({9, 11, 15, 17, 21, 23});
    const RelativeIdeal f(t, {9, 15, 21});
    const auto mi = micro_ideal(f);
    CHECK(mi.modulus == 9);
    CHECK(mi.a == std::vector<Int>({1, 3, 2, 1, 3, 2, 1, 3, 2}));
    CHECK(mi.b == mi.a);
    CHECK(graded_module_is_cm(f));
}

TEST_CASE("ideal a-array dominates the b-array") {
    for (auto [sg, ig] : {std::pair<std::vector<Int>, std::vector<Int>>{{6, 9, 11}, {9, 11}},
                          {{4, 5, 11}, {4, 5, 11}},
                          {{4, 5, 7}, {7, 8}},
                          {{5, 7, 9}, {14, 16, 18}}}) {
        const auto mi = micro_ideal(make(sg, ig));
        REQUIRE(mi.a.size() == mi.b.size());
        for (std::size_t i = 0; i < mi.a.size(); ++i) CHECK(mi.a[i] >= mi.b[i]);
        for (std::size_t i = 0; i < mi.b.size(); ++i) CHECK(mi.b[i] >= 1);
    }
}

TEST_CASE("the whole semigroup as an ideal shifts both arrays by one") {
    for (auto gens : {std::vector<Int>{4, 5, 11}, {6, 9, 11}, {4, 5, 6}}) {
        const auto s = NumericalSemigroup::from_generators(gens);
        const auto ring = micro_semigroup(s);
        const auto mod = micro_ideal(whole_ideal(s));
        REQUIRE(ring.a.size() == mod.a.size());
        for (std::size_t i = 0; i < ring.a.size(); ++i) {
            CHECK(mod.a[i] == ring.a[i] + 1);
            CHECK(mod.b[i] == ring.b[i] + 1);
        }
        CHECK(mod.apery.entries == ring.apery.entries);
    }
}

TEST_CASE("pullback of the worked example") {
    const PullbackData pb = pullback(make({6, 9, 11}, {9, 11}));
    CHECK(pb.t.generators() == std::vector<Int>({9, 11, 15, 17, 21, 23}));
    CHECK(pb.f.generators() == std::vector<Int>({9, 15, 21}));
    CHECK(pb.micro.modulus == 9);
    CHECK(pb.micro.apery.entries == std::vector<Int>({9, 37, 20, 21, 31, 32, 15, 43, 26}));
    CHECK(pb.micro.apery_blowup.entries == std::vector<Int>({0, 10, 2, 12, 4, 14, 6, 16, 8}));
    CHECK(pb.micro.a == std::vector<Int>({1, 3, 2, 1, 3, 2, 1, 3, 2}));
    CHECK(pb.verdict);
}

TEST_CASE("pullback of a maximal ideal is the semigroup itself") {
    const auto s = NumericalSemigroup::from_generators({4, 5, 11});
    const PullbackData pb = pullback(RelativeIdeal(s, {4, 5, 11}));
    CHECK(pb.t == s);
    CHECK(pb.f == RelativeIdeal(s, {4}));
    CHECK(!pb.verdict); // h = 3 here
    CHECK(pb.verdict == graded_ring_is_cm(s));
}

TEST_CASE("pullback of the family trims the superfluous generators") {
    const FamilyInstance fam = family_instance(3);
    CHECK(fam.s.generators() == std::vector<Int>({6, 11, 15, 31}));
    const PullbackData pb = pullback(fam.e);
    CHECK(pb.t == NumericalSemigroup::from_generators({6, 11, 21, 26, 31}));
    CHECK(pb.f.generators() == std::vector<Int>({fam.a, fam.a + fam.d}));
    CHECK(pb.verdict);

    const FamilyInstance fam4 = family_instance(4);
    const PullbackData pb4 = pullback(fam4.e);
    std::vector<Int> expected{fam4.a, fam4.b};
    expected.insert(expected.end(), fam4.c.begin(), fam4.c.end());
    expected.push_back(fam4.a + fam4.d);
    expected.push_back(fam4.b + fam4.d);
    std::sort(expected.begin(), expected.end());
    CHECK(pb4.t == NumericalSemigroup::from_generators(expected));
    CHECK(pb4.f.generators() == std::vector<Int>({fam4.a, fam4.a + fam4.d}));
    CHECK(pb4.verdict);
}

TEST_CASE("family generator arithmetic") {
    for (Int n = 3; n <= 6; ++n) {
        const FamilyInstance fam = family_instance(n);
        for (Int h = 3; h <= n; ++h)
            CHECK(fam.c[static_cast<std::size_t>(h - 3)] + fam.d == (h - 1) * fam.b + (2 * n + 1 - h) * fam.a);
        const auto t = pullback(fam.e).t;
        for (Int h = 1; h <= n - 1; ++h) CHECK(!t.contains(h * fam.b - fam.a));
    }
}

TEST_CASE("family Apery pattern") {
    // Ap_a(F_n) = {a} u {a+c_h} u {a+d+b, a+d} u {a+kb : 1 <= k <= n-1}
    for (Int n = 3; n <= 5; ++n) {
        const FamilyInstance fam = family_instance(n);
        std::vector<Int> expected{fam.a, fam.a + fam.d + fam.b, fam.a + fam.d};
        for (Int ch : fam.c) expected.push_back(fam.a + ch);
        for (Int k = 1; k <= n - 1; ++k) expected.push_back(fam.a + k * fam.b);
        std::sort(expected.begin(), expected.end());

        auto got = pullback(fam.e).micro.apery.entries;
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("principal ideals mirror the ring verdict") {
    // A principal ideal translates the whole ring, so both microinvariant
    // arrays are the ring's own arrays shifted by one (up to the residue
    // permutation): its graded module is CM exactly when the graded ring is.
    for (auto gens : {std::vector<Int>{4, 5, 11}, {6, 9, 11}, {4, 5, 7}, {4, 5, 6}}) {
        const auto s = NumericalSemigroup::from_generators(gens);
        const bool ring = graded_ring_is_cm(s);
        CHECK(graded_module_is_cm(RelativeIdeal(s, {s.multiplicity()})) == ring);
        CHECK(graded_module_is_cm(RelativeIdeal(s, {s.conductor() + 1})) == ring);
    }
    CHECK(!graded_module_is_cm(RelativeIdeal(NumericalSemigroup::from_generators({4, 5, 11}), {4})));
    CHECK(graded_module_is_cm(RelativeIdeal(NumericalSemigroup::from_generators({6, 9, 11}), {9})));
}

TEST_CASE("verdicts match the multiplicity-step regularity pattern") {
    // CM of the graded ring means adding the multiplicity always bumps the
    // order by exactly one; the failure witness for <4,5,11> sits at 11.
    for (auto gens : {std::vector<Int>{4, 5, 6}, {6, 9, 11}, {2, 3}, {4, 5, 11}}) {
        const auto s = NumericalSemigroup::from_generators(gens);
        const Int m = s.multiplicity();
        bool pattern = true;
        for (Int z = 0; z < s.conductor() + m; ++z)
            if (s.contains(z) && s.order(z + m) != s.order(z) + 1) pattern = false;
        CHECK(pattern == graded_ring_is_cm(s));
    }
    const auto bad = NumericalSemigroup::from_generators({4, 5, 11});
    CHECK(bad.order(11) == 1);
    CHECK(bad.order(15) == 3); // the jump that kills regularity
}

TEST_CASE("h-is-one agrees with the direct computation") {
    CHECK(h_is_one(make({6, 9, 11}, {9, 11})));
    CHECK(!h_is_one(make({4, 5, 11}, {4, 5, 11})));
    CHECK(h_is_one(make({4, 5, 6}, {9, 11})));   // r = 1
    CHECK(h_is_one(make({6, 9, 11}, {9})));      // principal
    CHECK(!h_is_one(make({4, 5, 7}, {7, 8})));   // h = r = 3
}

TEST_CASE("stable ideals always have h = 1") {
    for (auto [sg, ig] : {std::pair<std::vector<Int>, std::vector<Int>>{{4, 5, 6}, {9, 11}},
                          {{6, 9, 11}, {9}},
                          {{2, 3}, {2, 3}}}) {
        const RelativeIdeal e = make(sg, ig);
        if (reduction_number(e) <= 1) CHECK(h_is_one(e));
    }
}

TEST_CASE("integrally closed shortcut") {
    // not integrally closed: criterion inapplicable
    CHECK(!integrally_closed_h_one(make({4, 5, 6}, {9, 11})).has_value());

    // integrally closed ideal over <6,9,11>
    const RelativeIdeal bar = integral_closure(make({6, 9, 11}, {9, 11}));
    CHECK(bar.generators() == std::vector<Int>({9, 11, 12}));
    const auto verdict = integrally_closed_h_one(bar);
    REQUIRE(verdict.has_value());
    CHECK(*verdict == (h_number(bar) == 1));
    CHECK(*verdict == h_is_one(bar));

    // a maximal ideal is always integrally closed; the shortcut reduces to
    // the ring criterion on the semigroup itself
    const auto s = NumericalSemigroup::from_generators({4, 5, 11});
    const auto m_verdict = integrally_closed_h_one(RelativeIdeal(s, {4, 5, 11}));
    REQUIRE(m_verdict.has_value());
    CHECK(*m_verdict == graded_ring_is_cm(s));
    CHECK(*m_verdict == (h_number(RelativeIdeal(s, {4, 5, 11})) == 1));
}

TEST_CASE("pullback rejects improper ideals") {
    const auto s = NumericalSemigroup::from_generators({4, 5, 6});
    try {
        (void)pullback(whole_ideal(s));
        FAIL("expected range failure");
    } catch (const error& e) {
        CHECK(e.code() == errc::range_error);
    }
    try {
        (void)pullback(RelativeIdeal(s, {7}));
        FAIL("expected integrality failure");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_integral);
    }
}
