#pragma once

#include <chrono>

#include "rrsgp/analysis.hpp"
#include "rrsgp/family.hpp"
#include "rrsgp/instances.hpp"
#include "rrsgp/io.hpp"

// End-to-end verification battery: the four worked scenarios with frozen
// expected values, the parametric family, and the randomized cross-checks of
// the closure machinery against its independent oracle.

namespace rrsgp {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    double ms = 0;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& info) {
        if (!detail.empty()) detail += "; ";
        detail += info;
    }
};

namespace detail {

template <class F>
CheckResult timed_check(const std::string& name, F&& body) {
    CheckResult res;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(res);
    } catch (const std::exception& ex) {
        res.fail(std::string("exception: ") + ex.what());
    }
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline void expect(CheckResult& res, bool cond, const std::string& what) {
    if (!cond) res.fail(what);
}

} // namespace detail

/// S = <6,9,11>, E = {9,11}+S: the complete pullback pipeline with every
/// intermediate set pinned.
inline CheckResult check_pipeline_6_9_11() {
    using detail::expect;
    return detail::timed_check("pipeline <6,9,11> E={9,11}", [](CheckResult& res) {
        const auto s = NumericalSemigroup::from_generators({6, 9, 11});
        const RelativeIdeal e(s, {9, 11});
        expect(res, e.sporadic() == std::vector<Int>({9, 11, 15, 17, 18, 20, 21, 22, 23, 24}) && e.tail_start() == 26,
               "E canonical form");
        const RelativeIdeal f(s, {9});
        expect(res, f.sporadic() == std::vector<Int>({9, 15, 18, 20, 21, 24, 26, 27, 29, 30, 31, 32, 33}) &&
                        f.tail_start() == 35,
               "F canonical form");

        const PullbackData pb = pullback(e);
        expect(res, pb.t.generators() == std::vector<Int>({9, 11, 15, 17, 21, 23}), "pullback semigroup generators");
        const RelativeIdeal bf = blowup(pb.f);
        expect(res, bf.sporadic() == std::vector<Int>({0, 2, 4, 6}) && bf.tail_start() == 8, "blow-up of F");
        expect(res, bf.ambient() == pb.t.blowup(), "B(F) lives over B(T)");
        expect(res, pb.micro.apery.entries == std::vector<Int>({9, 37, 20, 21, 31, 32, 15, 43, 26}), "Apery of F");
        expect(res, pb.micro.apery_blowup.entries == std::vector<Int>({0, 10, 2, 12, 4, 14, 6, 16, 8}),
               "Apery of B(F)");
        expect(res, pb.micro.a == std::vector<Int>({1, 3, 2, 1, 3, 2, 1, 3, 2}), "a-array");
        expect(res, pb.micro.a == pb.micro.b, "a = b");
        expect(res, reduction_number(e) == 2, "reduction number");
        expect(res, h_number(e) == 1, "h");
        expect(res, pb.verdict, "pullback verdict");
    });
}

/// S = <4,5,11>, E = M: the non-monotone case where the first power is closed,
/// the second is not, and h lands at r.
inline CheckResult check_pipeline_4_5_11() {
    using detail::expect;
    return detail::timed_check("pipeline <4,5,11> E=M", [](CheckResult& res) {
        const auto s = NumericalSemigroup::from_generators({4, 5, 11});
        const RelativeIdeal e(s, {4, 5, 11});
        const RelativeIdeal two = scale(e, 2);
        const RelativeIdeal three = scale(e, 3);
        expect(res, two.generators() == std::vector<Int>({8, 9, 10}), "generators of the square");
        expect(res, three.generators() == std::vector<Int>({12, 13, 14, 15}), "generators of the cube");
        expect(res, three == RelativeIdeal(s, {12, 13, 14, 15}), "cube as generated ideal");
        expect(res, reduction_number(e) == 3, "reduction number");

        const RelativeIdeal tilde2 = rr_closure(e, 2);
        expect(res, tilde2 == intersect(shift(three, -4), whole_ideal(e.ambient_ptr())), "closure via shifted cube");
        expect(res, tilde2.contains(11), "11 enters the closed square");
        expect(res, rr_closure(e, 1) == e, "first power closed");
        expect(res, tilde2 != two, "second power open");

        const RRReport rep = rr_report(e);
        expect(res, rep.h == 3, "h");
        expect(res, rep.l && *rep.l == 2 && rep.prop1, "conductor index forces h = r");
    });
}

/// S = <4,5,6>, E = {9,11}+S: closed at every power yet not integrally closed.
inline CheckResult check_pipeline_4_5_6() {
    using detail::expect;
    return detail::timed_check("pipeline <4,5,6> E={9,11}", [](CheckResult& res) {
        const auto s = NumericalSemigroup::from_generators({4, 5, 6});
        const RelativeIdeal e(s, {9, 11});
        expect(res, scale(e, 2) == shift(e, 9), "square equals translated ideal");
        expect(res, reduction_number(e) == 1, "reduction number");
        expect(res, h_number(e) == 1, "h");
        const AnalysisReport rep = analyze(e);
        expect(res, rep.closure_gap == std::vector<Int>({10, 12}), "integral closure gap");
    });
}

/// The family S_n, n in [lo, hi]: r = n-1, h = 1 by both routes, and the
/// generator arithmetic that trims the pullback presentation.
inline CheckResult check_family_sweep(Int lo, Int hi) {
    using detail::expect;
    return detail::timed_check("family sweep n=" + std::to_string(lo) + ".." + std::to_string(hi),
                               [lo, hi](CheckResult& res) {
        for (Int n = lo; n <= hi; ++n) {
            const FamilyInstance fam = family_instance(n);
            const std::string tag = " (n=" + std::to_string(n) + ")";
            expect(res, reduction_number(fam.e) == n - 1, "reduction number" + tag);
            expect(res, h_number(fam.e) == 1, "h by direct closures" + tag);
            expect(res, h_is_one(fam.e), "h by pullback" + tag);
            for (Int h = 3; h <= n; ++h) {
                const Int ch = fam.c[static_cast<std::size_t>(h - 3)];
                expect(res, ch + fam.d == (h - 1) * fam.b + (2 * n + 1 - h) * fam.a,
                       "generator relation at h=" + std::to_string(h) + tag);
            }
        }
    });
}

/// S = <4,5,7>, E = {7,8}+S: the conductor criterion applies, so h must equal
/// the computed reduction number. The computed r is logged, not assumed.
inline CheckResult check_pipeline_4_5_7() {
    using detail::expect;
    return detail::timed_check("pipeline <4,5,7> E={7,8}", [](CheckResult& res) {
        const auto s = NumericalSemigroup::from_generators({4, 5, 7});
        const RelativeIdeal e(s, {7, 8});
        expect(res, e.contains(11), "7+4 belongs to the ideal");
        expect(res, suff_condition(e), "conductor criterion applies");
        const Int r = reduction_number(e);
        const Int h = h_number(e);
        res.note("computed r = " + std::to_string(r));
        expect(res, h == r, "h = r");
    });
}

inline std::vector<Instance> make_corpus(const InstanceParams& params) {
    std::vector<Instance> out;
    InstanceGenerator gen(params);
    for (Int i = 0; i < params.count; ++i) out.push_back(gen.next());
    return out;
}

/// Shift formula, colon union, and brute-force oracle closures must coincide
/// on every instance, for every power up to min(r+1, 4).
inline CheckResult check_three_way_closures(const std::vector<Instance>& corpus) {
    using detail::expect;
    return detail::timed_check("three-way closure agreement (" + std::to_string(corpus.size()) + " instances)",
                               [&corpus](CheckResult& res) {
        std::size_t k = 0;
        for (const auto& inst : corpus) {
            const auto s = NumericalSemigroup::from_generators(inst.sgp_gens);
            const RelativeIdeal e(s, inst.ideal_gens);
            const Int m_max = std::min<Int>(std::max<Int>(reduction_number(e), 1) + 1, 4);
            for (const auto& bad : closure_cross_check(e, m_max))
                res.fail("#" + std::to_string(k) + " " + bad);
            ++k;
        }
    });
}

/// The pullback test for h = 1 against the direct per-power computation.
inline CheckResult check_pullback_vs_direct_h(const std::vector<Instance>& corpus) {
    using detail::expect;
    return detail::timed_check("pullback h=1 test vs direct h (" + std::to_string(corpus.size()) + " instances)",
                               [&corpus](CheckResult& res) {
        auto probe = [&res](const RelativeIdeal& e, const std::string& tag) {
            if (h_is_one(e) != (h_number(e) == 1)) res.fail("biconditional breaks at " + tag);
        };
        std::size_t k = 0;
        for (const auto& inst : corpus) {
            const auto s = NumericalSemigroup::from_generators(inst.sgp_gens);
            probe(RelativeIdeal(s, inst.ideal_gens), "#" + std::to_string(k));
            ++k;
        }
        probe(RelativeIdeal(NumericalSemigroup::from_generators({6, 9, 11}), {9, 11}), "<6,9,11> {9,11}");
        probe(RelativeIdeal(NumericalSemigroup::from_generators({4, 5, 11}), {4, 5, 11}), "<4,5,11> M");
        probe(RelativeIdeal(NumericalSemigroup::from_generators({4, 5, 6}), {9, 11}), "<4,5,6> {9,11}");
        probe(RelativeIdeal(NumericalSemigroup::from_generators({4, 5, 7}), {7, 8}), "<4,5,7> {7,8}");
        for (Int n = 3; n <= 6; ++n) probe(family_instance(n).e, "family n=" + std::to_string(n));
    });
}

/// The invariant battery over the corpus: bounds, closed-power identities,
/// microinvariant inequalities, conductor index closed form, power reduction
/// bounds, and the two h = r criteria.
inline CheckResult check_invariant_battery(const std::vector<Instance>& corpus) {
    using detail::expect;
    return detail::timed_check("invariant battery (" + std::to_string(corpus.size()) + " instances)",
                               [&corpus](CheckResult& res) {
        std::size_t k = 0;
        for (const auto& inst : corpus) {
            const std::string tag = "#" + std::to_string(k);
            const auto s = NumericalSemigroup::from_generators(inst.sgp_gens);
            const RelativeIdeal e(s, inst.ideal_gens);
            const RRReport rep = rr_report(e);
            const Int c = s.conductor();

            for (const auto& breach : report_breaches(rep)) res.fail(tag + " " + breach);
            expect(res, rep.h <= std::max<Int>(rep.r, 1), tag + " h exceeds r");

            const Int m_at = std::max<Int>(rep.r, 1);
            expect(res, rr_closure(e, m_at) == scale(e, m_at), tag + " power at r not closed");
            expect(res, rr_closure(e, m_at + 1) == scale(e, m_at + 1), tag + " power past r not closed");

            const Microinvariants mi = micro_ideal(e);
            for (std::size_t i = 0; i < mi.a.size(); ++i)
                if (mi.a[i] < mi.b[i]) res.fail(tag + " a < b at residue " + std::to_string(i));

            const Int l = conductor_index(e);
            expect(res, l == (c + rep.e - 1) / rep.e, tag + " conductor index closed form");
            for (Int m : {Int{2}, Int{3}}) {
                const auto bound = power_reduction_bound_check(e, m);
                expect(res, bound.ok, tag + " power reduction bound at m=" + std::to_string(m));
            }
            if (rep.suff) expect(res, rep.h == rep.r, tag + " suff criterion must force h = r");
            if (rep.prop1) expect(res, rep.h == rep.r, tag + " conductor index criterion must force h = r");
            for (const auto& p : rep.powers)
                if (p.m >= l && p.m < rep.r)
                    expect(res, !p.closed, tag + " power in [l, r) must be open at m=" + std::to_string(p.m));

            // Stabilized-power formula independent of which power is used.
            const RelativeIdeal amb = whole_ideal(e.ambient_ptr());
            const RelativeIdeal tilde1 = rr_closure(e, 1);
            for (Int extra = 1; extra <= 2; ++extra) {
                const Int sp = rep.r + extra;
                const RelativeIdeal alt = intersect(shift(scale(e, sp), (1 - sp) * rep.e), amb);
                expect(res, alt == tilde1, tag + " formula changes with the power used");
            }
            expect(res, is_subset(tilde1, integral_closure(e)), tag + " closure escapes integral closure");
            const RelativeIdeal again = rr_closure_colon(tilde1, 1);
            expect(res, again == tilde1, tag + " closure not idempotent");
            ++k;
        }
    });
}

/// Every set-level operation against the oracle on a certified window.
inline CheckResult check_oracle_windows(const std::vector<Instance>& corpus) {
    using detail::expect;
    return detail::timed_check("oracle window agreement (" + std::to_string(corpus.size()) + " instances)",
                               [&corpus](CheckResult& res) {
        std::size_t k = 0;
        for (const auto& inst : corpus) {
            const std::string tag = "#" + std::to_string(k);
            ++k;
            const auto s = NumericalSemigroup::from_generators(inst.sgp_gens);
            const RelativeIdeal e1(s, inst.ideal_gens);
            const RelativeIdeal m_ideal(e1.ambient_ptr(), s.generators());
            const Int c = s.conductor();
            const Int mult = s.multiplicity();
            const Int w = 3 * (e1.tail_start() + m_ideal.tail_start()) + 64;

            const auto os = oracle::semigroup_set(inst.sgp_gens, w);
            expect(res, oracle::matches_semigroup(os, s, 0, w), tag + " semigroup membership");
            const auto oe = oracle::ideal_set(os, inst.ideal_gens, w);
            expect(res, oracle::matches_ideal(oe, e1, 0, w), tag + " ideal construction");
            expect(res, RelativeIdeal(e1.ambient_ptr(), e1.generators()) == e1, tag + " canonical round trip");
            const auto om = oracle::maximal_ideal_set(os);

            const Int w_bin = w - c - mult;
            expect(res, oracle::matches_ideal(oracle::o_sum(oe, om, w_bin), e1 + m_ideal, 0, w_bin), tag + " sum");
            const auto o2e = oracle::o_scale(oe, 2, w_bin);
            expect(res, oracle::matches_ideal(o2e, scale(e1, 2), 0, w_bin), tag + " double");
            const Int w_tri = w_bin - e1.min_element();
            expect(res, oracle::matches_ideal(oracle::o_scale(oe, 3, w_tri), scale(e1, 3), 0, w_tri), tag + " triple");
            expect(res, oracle::matches_ideal(oracle::o_shift(oe, 7), shift(e1, 7), 0, w_bin), tag + " shift up");
            expect(res, oracle::matches_ideal(oracle::o_shift(oe, -7), shift(e1, -7), -7, w_bin), tag + " shift down");

            const auto odiff = oracle::o_diff(oe, om);
            const RelativeIdeal idiff = e1 - m_ideal;
            expect(res, oracle::matches_ideal(odiff, idiff, odiff.lo, odiff.full_from() + 1), tag + " difference");
            const auto odiff2 = oracle::o_diff(o2e, oe);
            const RelativeIdeal idiff2 = scale(e1, 2) - e1;
            expect(res, oracle::matches_ideal(odiff2, idiff2, odiff2.lo, odiff2.full_from() + 1),
                   tag + " power difference");

            expect(res, oracle::matches_ideal(oracle::o_intersect(oe, om), intersect(e1, m_ideal), 0, w_bin),
                   tag + " intersection");
            expect(res, oracle::matches_ideal(oracle::o_unite(oe, om), unite(e1, m_ideal), 0, w_bin), tag + " union");

            // Integral closure: direct filter of the semigroup bitmap.
            auto oclo = oracle::BoundedSet::make(e1.min_element(), w, true);
            for (Int z = e1.min_element(); z < w; ++z)
                if (os.contains(z)) oclo.set(z);
            expect(res, oracle::matches_ideal(oclo, integral_closure(e1), 0, w), tag + " integral closure");

            // Blow-ups by their defining stabilized unions.
            const auto obs = oracle::o_blowup_sgp(os, c + 16);
            const auto bs = s.blowup();
            expect(res, oracle::matches_semigroup(obs, bs, 0, obs.full_from() + 1), tag + " semigroup blow-up");
            const auto obe = oracle::o_blowup_ideal(oe, os, c + 16);
            const RelativeIdeal be = blowup(e1);
            expect(res, oracle::matches_ideal(obe, be, obe.lo, obe.full_from() + 1), tag + " ideal blow-up");

            // Apery and conductor ideal.
            expect(res, oracle::o_apery(oe, mult) == apery(e1, mult).entries, tag + " ideal Apery");
            const auto ocond = oracle::BoundedSet::make(c, c, true);
            expect(res, oracle::matches_ideal(ocond, conductor_ideal(e1.ambient_ptr()), 0, c + 8),
                   tag + " conductor ideal");

            // Microinvariant arrays of the semigroup recomputed from raw
            // bitmaps, plus the t^m-regularity pattern when the graded ring
            // is Cohen-Macaulay.
            const auto mi = micro_semigroup(s);
            const auto ap_s = oracle::o_apery(os, mult);
            const auto ap_b = oracle::o_apery(obs, mult);
            const Int ord_hi = c + 2 * mult + 1;
            const auto ord = oracle::o_order_table(os, ord_hi);
            expect(res, ap_s == mi.apery.entries, tag + " semigroup Apery vs oracle");
            expect(res, ap_b == mi.apery_blowup.entries, tag + " blow-up Apery vs oracle");
            for (Int i = 0; i < mult; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                expect(res, mi.a[iu] * mult == ap_s[iu] - ap_b[iu], tag + " a-array vs oracle");
                expect(res, mi.b[iu] == ord[static_cast<std::size_t>(ap_s[iu])], tag + " b-array vs oracle");
            }
            if (mi.cm()) {
                for (Int z = 0; z + mult < ord_hi; ++z)
                    if (os.contains(z))
                        expect(res, ord[static_cast<std::size_t>(z + mult)] == ord[static_cast<std::size_t>(z)] + 1,
                               tag + " regularity pattern at " + std::to_string(z));
            }
        }
    });
}

struct VerifySummary {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// The full battery at a configurable corpus size.
inline VerifySummary run_verification(const InstanceParams& params, Int family_hi = 8) {
    VerifySummary out;
    out.checks.push_back(check_pipeline_6_9_11());
    out.checks.push_back(check_pipeline_4_5_11());
    out.checks.push_back(check_pipeline_4_5_6());
    out.checks.push_back(check_pipeline_4_5_7());
    out.checks.push_back(check_family_sweep(3, family_hi));
    const auto corpus = make_corpus(params);
    out.checks.push_back(check_three_way_closures(corpus));
    out.checks.push_back(check_pullback_vs_direct_h(corpus));
    out.checks.push_back(check_invariant_battery(corpus));
    out.checks.push_back(check_oracle_windows(corpus));
    return out;
}

} // namespace rrsgp
