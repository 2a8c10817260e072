#pragma once

#include <cstdint>

#include "rrsgp/ideal.hpp"

// Independent exhaustive recomputation of the set-level operations on bounded
// windows. Everything here works on raw membership bitmaps built directly
// from generator lists; nothing is shared with the canonical-form
// implementation it is used to check. Deliberately naive: exactness over
// speed, every window certified or refused.

namespace rrsgp::oracle {

struct BoundedSet {
    Int lo = 0;   // no members below lo
    Int hi = 0;   // bits describe [lo, hi) exactly
    bool cofinal = false; // [hi, inf) is contained in the set
    std::vector<std::uint64_t> words;

    static BoundedSet make(Int lo, Int hi, bool cofinal) {
        if (hi < lo) throw error(errc::window_too_small, "empty oracle window");
        BoundedSet s;
        s.lo = lo;
        s.hi = hi;
        s.cofinal = cofinal;
        s.words.assign(static_cast<std::size_t>((hi - lo + 63) / 64), 0);
        return s;
    }

    bool bit(Int z) const {
        const auto k = static_cast<std::size_t>(z - lo);
        return (words[k / 64] >> (k % 64)) & 1u;
    }
    void set(Int z) {
        const auto k = static_cast<std::size_t>(z - lo);
        words[k / 64] |= std::uint64_t{1} << (k % 64);
    }

    bool contains(Int z) const {
        if (z < lo) return false;
        if (z >= hi) {
            if (!cofinal) throw error(errc::window_too_small, "membership query above an uncertified window");
            return true;
        }
        return bit(z);
    }

    Int minimum() const {
        for (Int z = lo; z < hi; ++z)
            if (bit(z)) return z;
        if (cofinal) return hi;
        throw error(errc::window_too_small, "empty bounded set");
    }

    /// Smallest f with [f, inf) inside the set.
    Int full_from() const {
        if (!cofinal) throw error(errc::window_too_small, "full_from needs a cofinal set");
        Int f = hi;
        while (f > lo && bit(f - 1)) --f;
        return f;
    }

    /// 64 membership bits for the values [v, v+64), honoring lo/hi/cofinal.
    std::uint64_t window_word(Int v) const {
        if (v >= lo && v + 64 <= hi) {
            const auto off = static_cast<std::size_t>(v - lo);
            const std::size_t w = off / 64;
            const int sh = static_cast<int>(off % 64);
            std::uint64_t x = words[w] >> sh;
            if (sh && w + 1 < words.size()) x |= words[w + 1] << (64 - sh);
            return x;
        }
        std::uint64_t out = 0;
        for (int j = 0; j < 64; ++j) {
            const Int z = v + j;
            bool in = false;
            if (z >= lo && z < hi) in = bit(z);
            else if (z >= hi && cofinal) in = true;
            if (in) out |= std::uint64_t{1} << j;
        }
        return out;
    }
};

/// Membership bitmap of the monoid generated by gens, by direct dynamic
/// programming. The window must reach past the largest gap.
inline BoundedSet semigroup_set(const std::vector<Int>& gens, Int hi) {
    checked(hi);
    BoundedSet s = BoundedSet::make(0, hi, false);
    Int least = gens.front();
    for (Int g : gens) least = std::min(least, g);
    s.set(0);
    for (Int x = 1; x < hi; ++x)
        for (Int g : gens)
            if (x >= g && s.bit(x - g)) { s.set(x); break; }
    for (Int x = hi - least; x < hi; ++x)
        if (!s.bit(x)) throw error(errc::window_too_small, "window does not reach the cofinal tail");
    s.cofinal = true;
    return s;
}

/// Union of the translates g + S on [min(gens), hi).
inline BoundedSet ideal_set(const BoundedSet& sgp, const std::vector<Int>& gens, Int hi) {
    Int least = gens.front();
    for (Int g : gens) least = std::min(least, g);
    if (sgp.hi < hi - least)
        throw error(errc::window_too_small, "semigroup window too small for ideal construction");
    if (least + sgp.full_from() > hi)
        throw error(errc::window_too_small, "ideal window cannot certify its tail");
    BoundedSet e = BoundedSet::make(least, hi, true);
    for (Int g : gens)
        for (Int x = std::max(least, g); x < hi; ++x)
            if (sgp.contains(x - g)) e.set(x);
    return e;
}

inline BoundedSet o_shift(const BoundedSet& a, Int z) {
    BoundedSet out = a;
    out.lo = checked_add(a.lo, z);
    out.hi = checked_add(a.hi, z);
    return out;
}

/// Element-wise sum, exact below hi. Certification: every decomposition of a
/// value below hi uses factors inside the stored windows.
inline BoundedSet o_sum(const BoundedSet& a, const BoundedSet& b, Int hi) {
    const Int min_a = a.minimum(), min_b = b.minimum();
    if (a.hi < hi - min_b || b.hi < hi - min_a)
        throw error(errc::window_too_small, "sum window exceeds certified inputs");
    BoundedSet out = BoundedSet::make(checked_add(a.lo, b.lo), hi, false);
    const std::size_t nw = out.words.size();
    for (Int x = a.lo; x < a.hi; ++x) {
        if (!a.bit(x)) continue;
        const Int off = x - a.lo; // shift of b's window inside the output
        const std::size_t word_off = static_cast<std::size_t>(off / 64);
        const int bit_off = static_cast<int>(off % 64);
        for (std::size_t w = 0; w < b.words.size() && word_off + w < nw; ++w) {
            const std::uint64_t v = b.words[w];
            if (!v) continue;
            out.words[word_off + w] |= v << bit_off;
            if (bit_off && word_off + w + 1 < nw) out.words[word_off + w + 1] |= v >> (64 - bit_off);
        }
    }
    out.cofinal = (a.cofinal && a.full_from() + min_b <= hi) || (b.cofinal && b.full_from() + min_a <= hi);
    if (!out.cofinal) throw error(errc::window_too_small, "sum tail cannot be certified");
    // clear bits past hi in the last word
    const Int span = out.hi - out.lo;
    if (span % 64) out.words.back() &= (std::uint64_t{1} << (span % 64)) - 1;
    return out;
}

/// n-fold sum, n >= 1.
inline BoundedSet o_scale(const BoundedSet& a, Int n, Int hi) {
    if (n < 1) throw error(errc::range_error, "oracle scale needs n >= 1");
    const Int min_a = a.minimum();
    BoundedSet acc = a;
    for (Int k = 2; k <= n; ++k) acc = o_sum(acc, a, hi - (n - k) * min_a);
    return acc;
}

/// Difference {z : z + B inside A}, exact everywhere thanks to both operands
/// being fully known (bits below, cofinal tail above).
inline BoundedSet o_diff(const BoundedSet& a, const BoundedSet& b) {
    const Int min_a = a.minimum(), min_b = b.minimum();
    const Int fa = a.full_from();
    const Int lo = min_a - min_b;
    const Int hi = fa - min_b;
    BoundedSet out = BoundedSet::make(lo, std::max(hi, lo), true);
    for (Int z = lo; z < hi; ++z) {
        if (b.cofinal && z + b.hi < fa) continue; // some tail element of b escapes a
        bool ok = true;
        for (Int v = b.lo; v < b.hi && ok; v += 64) {
            const std::uint64_t need = b.window_word(v);
            if (!need) continue;
            if (need & ~a.window_word(z + v)) ok = false;
        }
        if (ok) out.set(z);
    }
    return out;
}

inline BoundedSet o_intersect(const BoundedSet& a, const BoundedSet& b) {
    const Int lo = std::max(a.lo, b.lo);
    const Int hi = std::max(a.hi, b.hi);
    if (!a.cofinal || !b.cofinal)
        throw error(errc::window_too_small, "intersection needs cofinal operands");
    BoundedSet out = BoundedSet::make(lo, hi, true);
    for (Int z = lo; z < hi; ++z)
        if (a.contains(z) && b.contains(z)) out.set(z);
    return out;
}

inline BoundedSet o_unite(const BoundedSet& a, const BoundedSet& b) {
    const Int lo = std::min(a.lo, b.lo);
    const Int hi = std::max(a.hi, b.hi);
    if (!a.cofinal || !b.cofinal)
        throw error(errc::window_too_small, "union needs cofinal operands");
    BoundedSet out = BoundedSet::make(lo, hi, true);
    for (Int z = lo; z < hi; ++z)
        if (a.contains(z) || b.contains(z)) out.set(z);
    return out;
}

/// Set equality over the integers; both operands must be fully known.
inline bool o_equal(const BoundedSet& a, const BoundedSet& b) {
    if (!a.cofinal || !b.cofinal)
        throw error(errc::window_too_small, "equality needs cofinal operands");
    const Int lo = std::min(a.lo, b.lo);
    const Int hi = std::max(a.hi, b.hi);
    for (Int z = lo; z < hi; ++z)
        if (a.contains(z) != b.contains(z)) return false;
    return true;
}

/// Ratliff-Rush closure of the m-th power by the union-of-colons definition.
/// The union freezes once the power chain starts translating by its minimum
/// (from then on every colon difference is literally the same set), so that
/// is the stopping rule; a plateau alone would not be proof.
inline BoundedSet o_rr(const BoundedSet& e, const BoundedSet& sgp, Int m, Int iteration_cap) {
    const Int min_e = e.minimum();
    BoundedSet j = m == 1 ? e : o_scale(e, m, e.hi + (m - 1) * min_e);
    const Int min_j = j.minimum();

    BoundedSet power = j;
    BoundedSet next = o_sum(j, j, j.hi + min_j);
    BoundedSet acc = o_intersect(o_diff(next, power), sgp);
    if (o_equal(next, o_shift(power, min_j))) return acc;
    for (Int n = 2; n <= iteration_cap; ++n) {
        power = next;
        next = o_sum(power, j, power.hi + min_j);
        acc = o_unite(acc, o_intersect(o_diff(next, power), sgp));
        if (o_equal(next, o_shift(power, min_j))) return acc;
    }
    throw error(errc::no_stabilization, "colon union failed to stabilize within the cap");
}

inline BoundedSet maximal_ideal_set(const BoundedSet& sgp) {
    BoundedSet m = sgp;
    if (m.lo == 0) m.words[0] &= ~std::uint64_t{1};
    return m;
}

/// Blow-up of an ideal by its defining stabilized union of differences. The
/// union freezes once both chains (the translated ideal above, the powers of
/// the maximal ideal below) advance by pure translation.
inline BoundedSet o_blowup_ideal(const BoundedSet& e, const BoundedSet& sgp, Int iteration_cap) {
    const BoundedSet m = maximal_ideal_set(sgp);
    const Int min_m = m.minimum();
    BoundedSet top = e;    // E + (i-1)M
    BoundedSet bottom = m; // iM
    BoundedSet acc = o_diff(top, bottom);
    for (Int i = 2; i <= iteration_cap; ++i) {
        BoundedSet next_top = o_sum(top, m, top.hi + min_m);
        BoundedSet next_bottom = o_sum(bottom, m, bottom.hi + min_m);
        const bool translating =
            o_equal(next_top, o_shift(top, min_m)) && o_equal(next_bottom, o_shift(bottom, min_m));
        top = std::move(next_top);
        bottom = std::move(next_bottom);
        acc = o_unite(acc, o_diff(top, bottom));
        if (translating) return acc;
    }
    throw error(errc::no_stabilization, "ideal blow-up union failed to stabilize within the cap");
}

/// Blow-up of a semigroup as the stabilized union of lM - lM.
inline BoundedSet o_blowup_sgp(const BoundedSet& sgp, Int iteration_cap) {
    const BoundedSet m = maximal_ideal_set(sgp);
    const Int min_m = m.minimum();
    BoundedSet power = m;
    BoundedSet acc = o_diff(power, power);
    for (Int l = 2; l <= iteration_cap; ++l) {
        BoundedSet next = o_sum(power, m, power.hi + min_m);
        const bool translating = o_equal(next, o_shift(power, min_m));
        power = std::move(next);
        acc = o_unite(acc, o_diff(power, power));
        if (translating) return acc;
    }
    throw error(errc::no_stabilization, "semigroup blow-up union failed to stabilize within the cap");
}

/// Per-residue minima read directly off the bitmap.
inline std::vector<Int> o_apery(const BoundedSet& set, Int modulus) {
    if (!set.cofinal) throw error(errc::window_too_small, "apery scan needs the cofinal tail");
    std::vector<Int> entries(static_cast<std::size_t>(modulus), 0);
    std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
    Int found = 0;
    for (Int z = set.minimum(); found < modulus; ++z) {
        if (!set.contains(z)) continue;
        const auto r = static_cast<std::size_t>(residue_of(z, modulus));
        if (!seen[r]) { seen[r] = 1; entries[r] = z; ++found; }
    }
    return entries;
}

/// Largest l with s in lM, by explicit power chains.
inline Int o_order(const BoundedSet& sgp, Int s) {
    if (s == 0) return 0;
    const BoundedSet m = maximal_ideal_set(sgp);
    const Int min_m = m.minimum();
    BoundedSet power = m;
    Int best = 0;
    for (Int l = 1; l * min_m <= s; ++l) {
        if (power.contains(s)) best = l;
        if ((l + 1) * min_m > s) break;
        power = o_sum(power, m, power.hi + min_m);
    }
    return best;
}

/// Orders of every value in [0, hi) at once, off the same chains. Entries at
/// non-members stay 0.
inline std::vector<Int> o_order_table(const BoundedSet& sgp, Int hi) {
    const BoundedSet m = maximal_ideal_set(sgp);
    const Int min_m = m.minimum();
    std::vector<Int> ord(static_cast<std::size_t>(hi), 0);
    BoundedSet power = m;
    for (Int l = 1; l * min_m < hi; ++l) {
        for (Int s = l * min_m; s < hi; ++s)
            if (power.contains(s)) ord[static_cast<std::size_t>(s)] = l;
        if ((l + 1) * min_m < hi) power = o_sum(power, m, power.hi + min_m);
    }
    return ord;
}

/// Window-certified comparison against a canonical-form ideal.
inline bool matches_ideal(const BoundedSet& o, const RelativeIdeal& e, Int lo, Int hi) {
    if (hi <= e.tail_start())
        throw error(errc::window_too_small, "comparison window must extend past the ideal tail");
    for (Int z = lo; z < hi; ++z)
        if (o.contains(z) != e.contains(z)) return false;
    return true;
}

inline bool matches_semigroup(const BoundedSet& o, const NumericalSemigroup& s, Int lo, Int hi) {
    if (hi <= s.conductor())
        throw error(errc::window_too_small, "comparison window must extend past the conductor");
    for (Int z = lo; z < hi; ++z)
        if (o.contains(z) != s.contains(z)) return false;
    return true;
}

} // namespace rrsgp::oracle
