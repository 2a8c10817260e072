#pragma once

#include <optional>

#include "rrsgp/rr.hpp"

namespace rrsgp {

enum class MicroKind { semigroup, ideal };

/// The two per-residue arrays read off an object and its blow-up: a[i] counts
/// the multiplicity-steps between the Apery entries of the object and of its
/// blow-up, b[i] is the depth of the Apery entry in the order filtration.
/// Their elementwise equality characterizes Cohen-Macaulayness of the
/// associated graded object.
struct Microinvariants {
    Int modulus = 0;
    AperyTable apery;
    AperyTable apery_blowup;
    std::vector<Int> a;
    std::vector<Int> b;
    MicroKind kind = MicroKind::semigroup;

    bool cm() const { return a == b; }
};

inline Microinvariants micro_semigroup(const NumericalSemigroup& s) {
    Microinvariants out;
    out.kind = MicroKind::semigroup;
    out.modulus = s.multiplicity();
    out.apery = s.apery(out.modulus);
    out.apery_blowup = s.blowup().apery(out.modulus);
    for (Int i = 0; i < out.modulus; ++i) {
        const Int gap = out.apery.entries[static_cast<std::size_t>(i)] -
                        out.apery_blowup.entries[static_cast<std::size_t>(i)];
        if (gap < 0 || gap % out.modulus != 0)
            throw error(errc::indivisible_apery, "Apery gap " + std::to_string(gap) + " at residue " + std::to_string(i));
        out.a.push_back(gap / out.modulus);
        out.b.push_back(s.order(out.apery.entries[static_cast<std::size_t>(i)]));
    }
    return out;
}

inline bool graded_ring_is_cm(const NumericalSemigroup& s) { return micro_semigroup(s).cm(); }

/// Ideal variant: modulus is the ambient multiplicity, the b-array uses the
/// filtration by lM + E and is offset by one (b[i] >= 1), exactly as the two
/// definitions differ.
inline Microinvariants micro_ideal(const RelativeIdeal& e) {
    detail::require_genuine_ideal(e, "micro_ideal");
    const auto& s = e.ambient();
    Microinvariants out;
    out.kind = MicroKind::ideal;
    out.modulus = s.multiplicity();
    out.apery = apery(e, out.modulus);
    out.apery_blowup = apery(blowup(e), out.modulus);
    for (Int i = 0; i < out.modulus; ++i) {
        const Int gap = out.apery.entries[static_cast<std::size_t>(i)] -
                        out.apery_blowup.entries[static_cast<std::size_t>(i)];
        if (gap < 0 || gap % out.modulus != 0)
            throw error(errc::indivisible_apery, "Apery gap " + std::to_string(gap) + " at residue " + std::to_string(i));
        out.a.push_back(gap / out.modulus);
    }

    // b[i] = 1 + max{l : alpha_i in lM + E}; the chain lM + E is decreasing
    // and its minimum grows by the multiplicity each step.
    out.b.assign(static_cast<std::size_t>(out.modulus), 0);
    const RelativeIdeal maximal(e.ambient_ptr(), s.generators());
    RelativeIdeal level = e;
    std::vector<char> open(static_cast<std::size_t>(out.modulus), 1);
    Int remaining = out.modulus;
    for (Int l = 1; remaining > 0; ++l) {
        level = level + maximal;
        for (Int i = 0; i < out.modulus; ++i) {
            if (!open[static_cast<std::size_t>(i)]) continue;
            if (!level.contains(out.apery.entries[static_cast<std::size_t>(i)])) {
                out.b[static_cast<std::size_t>(i)] = l;
                open[static_cast<std::size_t>(i)] = 0;
                --remaining;
            }
        }
    }
    return out;
}

inline bool graded_module_is_cm(const RelativeIdeal& e) { return micro_ideal(e).cm(); }

/// The valuation-level pullback: T adjoins 0 to the ideal, F is the ambient
/// semigroup translated by the ideal's multiplicity, viewed inside T. The
/// verdict reads h = 1 off the microinvariants of F.
struct PullbackData {
    NumericalSemigroup t;
    RelativeIdeal f;
    Microinvariants micro;
    bool verdict = false;
};

inline PullbackData pullback(const RelativeIdeal& e) {
    detail::require_genuine_ideal(e, "pullback");
    const Int mult = e.min_element();
    if (mult < 1) throw error(errc::range_error, "pullback needs a proper ideal");
    const auto& s = e.ambient();

    std::vector<Int> elements = e.sporadic();
    elements.insert(elements.begin(), 0);
    auto t = std::make_shared<const NumericalSemigroup>(
        NumericalSemigroup::from_elements(elements, e.tail_start()));
    if (t->multiplicity() != mult)
        throw error(errc::range_error, "pullback semigroup multiplicity disagrees with e(E)");

    const Int lo = mult;
    const Int tail_from = checked_add(mult, s.conductor());
    std::vector<char> member(static_cast<std::size_t>(tail_from - lo), 0);
    for (Int z = lo; z < tail_from; ++z)
        member[static_cast<std::size_t>(z - lo)] = s.contains(z - mult);
    RelativeIdeal f = RelativeIdeal::from_members(t, lo, member, tail_from);

    PullbackData out{*t, std::move(f), {}, false};
    out.micro = micro_ideal(out.f);
    out.verdict = out.micro.cm();
    return out;
}

/// h = 1 read through the pullback; must agree with h_number(e) == 1.
inline bool h_is_one(const RelativeIdeal& e) { return pullback(e).verdict; }

/// For integrally closed ideals only, h = 1 can be read off the pullback
/// semigroup itself; absent when the ideal is not integrally closed.
inline std::optional<bool> integrally_closed_h_one(const RelativeIdeal& e) {
    if (!e.is_contained_in_ambient()) return std::nullopt;
    if (e != integral_closure(e)) return std::nullopt;
    return graded_ring_is_cm(pullback(e).t);
}

} // namespace rrsgp
