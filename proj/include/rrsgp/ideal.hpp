#pragma once

#include <memory>
#include <vector>

#include "rrsgp/semigroup.hpp"

namespace rrsgp {

/// A relative ideal of a numerical semigroup, i.e. a set E of integers with
/// E + S contained in E, bounded below and eventually full. Canonical form is
/// the pair (sporadic elements below tail_start, minimal tail_start); the
/// minimal generator list is kept as a derived cache. Values are immutable;
/// two ideals over the same ambient are equal iff their canonical forms are.
class RelativeIdeal {
public:
    RelativeIdeal(const NumericalSemigroup& ambient, std::vector<Int> generators)
        : RelativeIdeal(std::make_shared<const NumericalSemigroup>(ambient), std::move(generators)) {}

    RelativeIdeal(std::shared_ptr<const NumericalSemigroup> ambient, std::vector<Int> generators);

    /// Build from explicit membership on [lo, tail_from) plus the guarantee
    /// that [tail_from, infinity) is contained in the set.
    static RelativeIdeal from_members(std::shared_ptr<const NumericalSemigroup> ambient, Int lo,
                                      const std::vector<char>& member, Int tail_from);

    const NumericalSemigroup& ambient() const { return *amb_; }
    const std::shared_ptr<const NumericalSemigroup>& ambient_ptr() const { return amb_; }
    const std::vector<Int>& sporadic() const { return sporadic_; }
    Int tail_start() const { return tail_; }
    const std::vector<Int>& generators() const { return gens_; }

    /// Smallest element e(E).
    Int min_element() const { return sporadic_.empty() ? tail_ : sporadic_.front(); }

    bool contains(Int z) const {
        if (z >= tail_) return true;
        return std::binary_search(sporadic_.begin(), sporadic_.end(), z);
    }

    /// Members in [lo, hi), sporadic part plus truncated tail.
    std::vector<Int> elements_below(Int hi) const {
        std::vector<Int> out;
        for (Int x : sporadic_)
            if (x < hi) out.push_back(x);
        for (Int x = tail_; x < hi; ++x) out.push_back(x);
        return out;
    }

    bool is_contained_in_ambient() const {
        for (Int g : gens_)
            if (!amb_->contains(g)) return false;
        return true;
    }

    bool operator==(const RelativeIdeal& o) const {
        return ambient() == o.ambient() && tail_ == o.tail_ && sporadic_ == o.sporadic_;
    }
    bool operator!=(const RelativeIdeal& o) const { return !(*this == o); }

private:
    RelativeIdeal() = default;

    void derive_generators();

    std::shared_ptr<const NumericalSemigroup> amb_;
    std::vector<Int> sporadic_;
    Int tail_ = 0;
    std::vector<Int> gens_;
};

namespace detail {
inline void require_same_ambient(const RelativeIdeal& a, const RelativeIdeal& b) {
    if (a.ambient_ptr() == b.ambient_ptr()) return;
    if (a.ambient() != b.ambient())
        throw error(errc::ambient_mismatch, "operands live over different semigroups");
}
} // namespace detail

inline RelativeIdeal RelativeIdeal::from_members(std::shared_ptr<const NumericalSemigroup> ambient, Int lo,
                                                 const std::vector<char>& member, Int tail_from) {
    checked(lo);
    checked(tail_from);
    RelativeIdeal e;
    e.amb_ = std::move(ambient);
    Int tail = tail_from;
    while (tail > lo && member[static_cast<std::size_t>(tail - 1 - lo)]) --tail;
    e.tail_ = tail;
    for (Int x = lo; x < tail; ++x)
        if (member[static_cast<std::size_t>(x - lo)]) e.sporadic_.push_back(x);

    // Stability under the ambient generators, checkable on the window.
    for (Int x : e.sporadic_)
        for (Int g : e.amb_->generators())
            if (x + g < tail && !std::binary_search(e.sporadic_.begin(), e.sporadic_.end(), x + g))
                throw error(errc::not_closed, "window is not stable under ambient generator " + std::to_string(g));

    e.derive_generators();
    return e;
}

inline void RelativeIdeal::derive_generators() {
    const auto& S = *amb_;
    const Int m = S.multiplicity();
    const Int minel = min_element();
    std::vector<Int> candidates = sporadic_;
    for (Int x = tail_; x < tail_ + m; ++x) candidates.push_back(x);

    gens_.clear();
    for (Int cand : candidates) {
        bool reachable = false;
        // cand is redundant iff cand - s lies in E for some nonzero s in S.
        for (Int s : S.small_elements()) {
            if (s == 0) continue;
            if (s > cand - minel) break;
            if (contains(cand - s)) { reachable = true; break; }
        }
        if (!reachable) {
            for (Int s = std::max<Int>(S.conductor(), 1); s <= cand - minel; ++s)
                if (contains(cand - s)) { reachable = true; break; }
        }
        if (!reachable) gens_.push_back(cand);
    }
}

inline RelativeIdeal::RelativeIdeal(std::shared_ptr<const NumericalSemigroup> ambient, std::vector<Int> generators) {
    if (generators.empty()) throw error(errc::empty_generators, "an ideal needs at least one generator");
    for (Int g : generators) checked(g);
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    const auto& S = *ambient;
    const Int lo = generators.front();
    const Int tail_from = checked_add(lo, S.conductor());
    std::vector<char> member(static_cast<std::size_t>(tail_from - lo), 0);
    for (Int g : generators) {
        for (Int x = std::max(lo, g); x < tail_from; ++x)
            if (S.contains(x - g)) member[static_cast<std::size_t>(x - lo)] = 1;
    }
    *this = from_members(std::move(ambient), lo, member, tail_from);
}

/// Sum of ideals: generated by the pairwise sums of the generators.
inline RelativeIdeal operator+(const RelativeIdeal& a, const RelativeIdeal& b) {
    detail::require_same_ambient(a, b);
    std::vector<Int> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (Int x : a.generators())
        for (Int y : b.generators()) gens.push_back(checked_add(x, y));
    return RelativeIdeal(a.ambient_ptr(), std::move(gens));
}

/// The ambient semigroup viewed as the ideal generated by 0.
inline RelativeIdeal whole_ideal(std::shared_ptr<const NumericalSemigroup> ambient) {
    return RelativeIdeal(std::move(ambient), {0});
}
inline RelativeIdeal whole_ideal(const NumericalSemigroup& ambient) {
    return RelativeIdeal(ambient, {0});
}

/// n-fold sum; n = 0 gives the ambient semigroup as an ideal.
inline RelativeIdeal scale(const RelativeIdeal& e, Int n) {
    if (n < 0) throw error(errc::range_error, "scale factor must be non-negative");
    if (n == 0) return whole_ideal(e.ambient_ptr());
    RelativeIdeal acc = e;
    for (Int k = 1; k < n; ++k) acc = acc + e;
    return acc;
}

inline RelativeIdeal shift(const RelativeIdeal& e, Int z) {
    std::vector<Int> gens = e.generators();
    for (Int& g : gens) g = checked_add(g, z);
    return RelativeIdeal(e.ambient_ptr(), std::move(gens));
}

/// Ideal difference {z : z + b is contained in a}. It suffices to test the
/// generators of b; membership above tail(a) - min(b) is automatic.
inline RelativeIdeal operator-(const RelativeIdeal& a, const RelativeIdeal& b) {
    detail::require_same_ambient(a, b);
    const Int lo = checked_add(a.min_element(), -b.min_element());
    const Int tail_from = checked_add(a.tail_start(), -b.min_element());
    std::vector<char> member(static_cast<std::size_t>(tail_from - lo), 0);
    for (Int z = lo; z < tail_from; ++z) {
        bool ok = true;
        for (Int g : b.generators())
            if (!a.contains(z + g)) { ok = false; break; }
        member[static_cast<std::size_t>(z - lo)] = ok;
    }
    return RelativeIdeal::from_members(a.ambient_ptr(), lo, member, tail_from);
}

inline RelativeIdeal intersect(const RelativeIdeal& a, const RelativeIdeal& b) {
    detail::require_same_ambient(a, b);
    const Int lo = std::max(a.min_element(), b.min_element());
    const Int tail_from = std::max(a.tail_start(), b.tail_start());
    std::vector<char> member(static_cast<std::size_t>(std::max<Int>(tail_from - lo, 0)), 0);
    for (Int z = lo; z < tail_from; ++z)
        member[static_cast<std::size_t>(z - lo)] = a.contains(z) && b.contains(z);
    return RelativeIdeal::from_members(a.ambient_ptr(), lo, member, tail_from);
}

inline RelativeIdeal unite(const RelativeIdeal& a, const RelativeIdeal& b) {
    detail::require_same_ambient(a, b);
    const Int lo = std::min(a.min_element(), b.min_element());
    const Int tail_from = std::min(a.tail_start(), b.tail_start());
    std::vector<char> member(static_cast<std::size_t>(std::max<Int>(tail_from - lo, 0)), 0);
    for (Int z = lo; z < tail_from; ++z)
        member[static_cast<std::size_t>(z - lo)] = a.contains(z) || b.contains(z);
    return RelativeIdeal::from_members(a.ambient_ptr(), lo, member, tail_from);
}

inline bool is_subset(const RelativeIdeal& a, const RelativeIdeal& b) {
    detail::require_same_ambient(a, b);
    for (Int g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

/// All ambient elements at or above min(e); requires a genuine ideal E in S.
inline RelativeIdeal integral_closure(const RelativeIdeal& e) {
    if (!e.is_contained_in_ambient())
        throw error(errc::not_integral, "integral closure needs an ideal contained in its semigroup");
    const auto& S = e.ambient();
    const Int lo = e.min_element();
    const Int tail_from = std::max(S.conductor(), lo);
    std::vector<char> member(static_cast<std::size_t>(tail_from - lo), 0);
    for (Int z = lo; z < tail_from; ++z)
        member[static_cast<std::size_t>(z - lo)] = S.contains(z);
    return RelativeIdeal::from_members(e.ambient_ptr(), lo, member, tail_from);
}

/// Blow-up of an ideal: the relative ideal of B(S) generated by the ideal's
/// generators shifted down by the multiplicity.
inline RelativeIdeal blowup(const RelativeIdeal& e) {
    auto bs = std::make_shared<const NumericalSemigroup>(e.ambient().blowup());
    std::vector<Int> gens = e.generators();
    for (Int& g : gens) g -= e.ambient().multiplicity();
    return RelativeIdeal(std::move(bs), std::move(gens));
}

/// Per-residue minima; entries need not contain 0 or the modulus.
inline AperyTable apery(const RelativeIdeal& e, Int modulus) {
    if (modulus < 1) throw error(errc::range_error, "modulus must be positive");
    checked_add(e.tail_start(), modulus);
    AperyTable t;
    t.modulus = modulus;
    t.entries.assign(static_cast<std::size_t>(modulus), 0);
    std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
    Int found = 0;
    auto visit = [&](Int x) {
        const auto r = static_cast<std::size_t>(residue_of(x, modulus));
        if (!seen[r]) { seen[r] = 1; t.entries[r] = x; ++found; }
    };
    for (Int x : e.sporadic()) {
        visit(x);
        if (found == modulus) return t;
    }
    for (Int x = e.tail_start(); found < modulus; ++x) visit(x);
    return t;
}

/// The conductor ideal: every integer at or past the conductor.
inline RelativeIdeal conductor_ideal(const NumericalSemigroup& s) {
    auto amb = std::make_shared<const NumericalSemigroup>(s);
    return RelativeIdeal::from_members(std::move(amb), s.conductor(), {}, s.conductor());
}
inline RelativeIdeal conductor_ideal(std::shared_ptr<const NumericalSemigroup> s) {
    const Int c = s->conductor();
    return RelativeIdeal::from_members(std::move(s), c, {}, c);
}

} // namespace rrsgp
