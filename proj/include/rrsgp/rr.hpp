#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrsgp/ideal.hpp"

namespace rrsgp {

namespace detail {
inline void require_genuine_ideal(const RelativeIdeal& e, const char* who) {
    if (!e.is_contained_in_ambient())
        throw error(errc::not_integral, std::string(who) + " needs an ideal contained in its semigroup");
}
} // namespace detail

/// Least n with (n+1)E = e(E) + nE. Finite because the chain of translates
/// stabilizes; the iteration cap is far beyond stabilization.
inline Int reduction_number(const RelativeIdeal& e) {
    detail::require_genuine_ideal(e, "reduction_number");
    const Int mult = e.min_element();
    const Int cap = e.ambient().conductor() + 2 * mult + 2;
    RelativeIdeal power = whole_ideal(e.ambient_ptr());
    for (Int n = 0; n <= cap; ++n) {
        RelativeIdeal next = power + e;
        if (next == shift(power, mult)) return n;
        power = std::move(next);
    }
    throw error(errc::overflow, "reduction number iteration exceeded safety cap");
}

/// Closure of the m-th power through the stabilized-power formula:
/// shift the r-th power by (m - r)*e and cut back to the semigroup.
inline RelativeIdeal rr_closure(const RelativeIdeal& e, Int m) {
    detail::require_genuine_ideal(e, "rr_closure");
    if (m < 1) throw error(errc::range_error, "power index must be positive");
    const Int r = reduction_number(e);
    const Int mult = e.min_element();
    RelativeIdeal shifted = shift(scale(e, r), (m - r) * mult);
    return intersect(shifted, whole_ideal(e.ambient_ptr()));
}

/// Closure of the m-th power through the colon-union definition: the union of
/// the differences (n+1)J - nJ cut back to the semigroup, J = mE, iterated
/// until it stabilizes. Cross-checks rr_closure on every instance.
inline RelativeIdeal rr_closure_colon(const RelativeIdeal& e, Int m) {
    detail::require_genuine_ideal(e, "rr_closure_colon");
    if (m < 1) throw error(errc::range_error, "power index must be positive");
    const RelativeIdeal j = scale(e, m);
    const Int r_j = reduction_number(j);
    const RelativeIdeal ambient = whole_ideal(e.ambient_ptr());

    auto step = [&](const RelativeIdeal& low, const RelativeIdeal& high) {
        return intersect(high - low, ambient);
    };

    RelativeIdeal power = j;
    RelativeIdeal next = j + j;
    RelativeIdeal acc = step(power, next);
    const Int steps = std::max<Int>(r_j, 1);
    for (Int n = 2; n <= steps; ++n) {
        power = std::move(next);
        next = power + j;
        acc = unite(acc, step(power, next));
    }
    // One extra step: the chain must already have stabilized.
    power = std::move(next);
    next = power + j;
    if (unite(acc, step(power, next)) != acc)
        throw error(errc::no_stabilization, "colon chain still growing past its reduction number");
    return acc;
}

/// Least n such that every power at or past n is closed. Scans downward from
/// r-1; closedness is not monotone in the power, so every step is inspected.
inline Int h_number(const RelativeIdeal& e) {
    const Int r = reduction_number(e);
    if (r <= 1) return 1;
    for (Int m = r - 1; m >= 1; --m)
        if (scale(e, m) != rr_closure(e, m)) return m + 1;
    return 1;
}

/// Conductor index l: least m such that the shifted r-th power lands inside
/// the conductor ideal. Closed form ceil(c / e); computed here by the generic
/// subset scan, the closed form is enforced as a tested property.
inline Int conductor_index(const RelativeIdeal& e) {
    detail::require_genuine_ideal(e, "conductor_index");
    const Int mult = e.min_element();
    const Int c = e.ambient().conductor();
    if (mult == 0 && c > 0)
        throw error(errc::range_error, "conductor index is undefined for the whole semigroup");
    const Int r = reduction_number(e);
    const RelativeIdeal r_power = scale(e, r);
    const RelativeIdeal cond = conductor_ideal(e.ambient_ptr());
    for (Int m = 0; m <= c + 1; ++m) {
        if (is_subset(shift(r_power, (m - r) * mult), cond)) return m;
    }
    throw error(errc::overflow, "conductor index scan exceeded its bound");
}

/// True iff r >= 2 and (r-1)*e >= c; when true, h is forced to equal r.
inline bool suff_condition(const RelativeIdeal& e) {
    const Int r = reduction_number(e);
    return r >= 2 && (r - 1) * e.min_element() >= e.ambient().conductor();
}

struct PowerBoundCheck {
    Int power_reduction_number = 0; ///< r(mE)
    Int bound = 0;                  ///< (r + l)/m for the least l making m | r+l
    bool ok = false;
};

/// Checks the reduction number of the m-th power against its ceiling bound.
inline PowerBoundCheck power_reduction_bound_check(const RelativeIdeal& e, Int m) {
    if (m < 2) throw error(errc::range_error, "power must be at least 2");
    const Int r = reduction_number(e);
    const Int pad = (m - r % m) % m;
    PowerBoundCheck out;
    out.bound = (r + pad) / m;
    out.power_reduction_number = reduction_number(scale(e, m));
    out.ok = out.power_reduction_number <= out.bound;
    return out;
}

struct RRPower {
    Int m = 0;
    RelativeIdeal power;
    RelativeIdeal closure;
    bool closed = false;
};

/// Full per-ideal verdict: multiplicity, reduction number, asymptotic closure
/// number h, per-power closures up to r, and the two h = r criteria flags.
struct RRReport {
    RelativeIdeal ideal;
    Int e = 0;
    Int r = 0;
    Int h = 1;
    std::optional<Int> l;   ///< conductor index; absent when undefined (E = S, c > 0)
    bool prop1 = false;     ///< l < r
    bool suff = false;      ///< r >= 2 and (r-1)e >= c
    std::vector<RRPower> powers;
};

inline RRReport rr_report(const RelativeIdeal& e) {
    detail::require_genuine_ideal(e, "rr_report");
    RRReport rep{e, e.min_element(), reduction_number(e), 1, {}, false, false, {}};
    const Int c = e.ambient().conductor();
    const RelativeIdeal ambient = whole_ideal(e.ambient_ptr());

    RelativeIdeal power = ambient;
    std::vector<RelativeIdeal> chain;
    chain.push_back(power);
    for (Int m = 1; m <= rep.r; ++m) {
        power = power + e;
        chain.push_back(power);
    }
    for (Int m = 1; m <= rep.r; ++m) {
        RelativeIdeal closure = intersect(shift(chain.back(), (m - rep.r) * rep.e), ambient);
        const bool closed = chain[static_cast<std::size_t>(m)] == closure;
        if (!closed) rep.h = std::max(rep.h, m + 1);
        rep.powers.push_back({m, chain[static_cast<std::size_t>(m)], std::move(closure), closed});
    }

    if (rep.e > 0 || c == 0) rep.l = conductor_index(e);
    rep.prop1 = rep.l.has_value() && *rep.l < rep.r;
    rep.suff = rep.r >= 2 && (rep.r - 1) * rep.e >= c;
    return rep;
}

/// Internal coherence of a report; returns human-readable breach descriptions
/// (empty means consistent). Used by the CLI to decide its exit code.
inline std::vector<std::string> report_breaches(const RRReport& rep) {
    std::vector<std::string> out;
    if (rep.h < 1 || rep.h > std::max<Int>(rep.r, 1))
        out.push_back("h=" + std::to_string(rep.h) + " escapes [1, max(r,1)] with r=" + std::to_string(rep.r));
    if (rep.r <= 1 && rep.h != 1) out.push_back("r <= 1 must force h = 1");
    for (const auto& p : rep.powers) {
        if (p.closed != (p.power == p.closure))
            out.push_back("closed flag mismatch at m=" + std::to_string(p.m));
        if (p.m >= rep.h && !p.closed)
            out.push_back("power m=" + std::to_string(p.m) + " at or past h must be closed");
        if (!is_subset(p.power, p.closure))
            out.push_back("power m=" + std::to_string(p.m) + " not inside its closure");
        if (p.closure.min_element() != p.m * rep.e)
            out.push_back("closure minimum at m=" + std::to_string(p.m) + " is not m*e");
    }
    if (rep.prop1 && rep.h != rep.r) out.push_back("l < r must force h = r");
    if (rep.suff && rep.h != rep.r) out.push_back("(r-1)e >= c must force h = r");
    return out;
}

} // namespace rrsgp
