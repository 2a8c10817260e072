#pragma once

#include <chrono>

#include "rrsgp/cm.hpp"
#include "rrsgp/oracle.hpp"

namespace rrsgp {

/// Everything the pipeline knows about one (semigroup, ideal) pair.
struct AnalysisReport {
    RelativeIdeal ideal;
    RRReport rr;
    PullbackData pb;
    Microinvariants micro_sgp;             ///< of the ambient semigroup
    bool gr_ring_cm = false;               ///< ambient associated graded ring
    std::optional<bool> intclosed_verdict; ///< the integrally-closed shortcut, when applicable
    std::vector<Int> closure_gap;          ///< integral closure minus the ideal
    double ms = 0;
};

inline AnalysisReport analyze(const RelativeIdeal& e) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport rep{e, rr_report(e), pullback(e), micro_semigroup(e.ambient()), false, {}, {}, 0};
    rep.gr_ring_cm = rep.micro_sgp.cm();
    rep.intclosed_verdict = integrally_closed_h_one(e);

    // The closure gap is finite: above the ideal's tail both sets are full.
    const RelativeIdeal closure = integral_closure(e);
    for (Int z : closure.elements_below(e.tail_start()))
        if (!e.contains(z)) rep.closure_gap.push_back(z);

    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Cross-report coherence on top of the per-report checks; a non-empty result
/// makes the CLI exit with status 2.
inline std::vector<std::string> analysis_breaches(const AnalysisReport& rep) {
    std::vector<std::string> out = report_breaches(rep.rr);
    if (rep.pb.verdict != (rep.rr.h == 1))
        out.push_back("pullback verdict disagrees with h = " + std::to_string(rep.rr.h));
    if (rep.intclosed_verdict && *rep.intclosed_verdict != (rep.rr.h == 1))
        out.push_back("integrally-closed shortcut disagrees with h");
    for (std::size_t i = 0; i < rep.pb.micro.a.size(); ++i)
        if (rep.pb.micro.a[i] < rep.pb.micro.b[i])
            out.push_back("a < b at residue " + std::to_string(i));
    return out;
}

/// Three-way closure agreement for one ideal: the stabilized-power formula,
/// the colon union, and the brute-force oracle must coincide for every power
/// up to m_max. Returns mismatch descriptions.
inline std::vector<std::string> closure_cross_check(const RelativeIdeal& e, Int m_max) {
    std::vector<std::string> out;
    const auto& s = e.ambient();
    const Int c = s.conductor();
    const Int e_min = e.min_element();
    const Int window = 2 * (c + e.tail_start()) + (m_max + 2) * std::max<Int>(e_min, 1) + 64;
    const auto o_sgp = oracle::semigroup_set(s.generators(), window);
    const auto o_e = oracle::ideal_set(o_sgp, e.generators(), window);

    for (Int m = 1; m <= m_max; ++m) {
        const RelativeIdeal via_formula = rr_closure(e, m);
        const RelativeIdeal via_colon = rr_closure_colon(e, m);
        if (via_formula != via_colon) {
            out.push_back("formula and colon closures differ at m=" + std::to_string(m));
            continue;
        }
        const auto via_oracle = oracle::o_rr(o_e, o_sgp, m, c + 2 * std::max<Int>(e_min, 1) + 8);
        const Int cmp_hi = std::min<Int>(via_oracle.full_from() + 1, window);
        if (cmp_hi <= via_formula.tail_start()) {
            out.push_back("oracle window too small at m=" + std::to_string(m));
            continue;
        }
        if (!oracle::matches_ideal(via_oracle, via_formula, 0, cmp_hi))
            out.push_back("oracle closure differs at m=" + std::to_string(m));
    }
    return out;
}

} // namespace rrsgp
