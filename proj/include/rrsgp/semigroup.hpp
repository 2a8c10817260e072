#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "rrsgp/base.hpp"

namespace rrsgp {

/// Per-residue minima of a set of integers with respect to a modulus.
/// entries[i] is the least element congruent to i (mod modulus).
struct AperyTable {
    Int modulus = 0;
    std::vector<Int> entries;

    bool operator==(const AperyTable&) const = default;

    Int max_entry() const { return *std::max_element(entries.begin(), entries.end()); }
};

inline Int residue_of(Int z, Int n) {
    Int r = z % n;
    return r < 0 ? r + n : r;
}

/// A cofinite additive submonoid of the natural numbers, in canonical form:
/// minimal generators, conductor, and the full list of elements below the
/// conductor. Immutable after construction.
class NumericalSemigroup {
public:
    static NumericalSemigroup from_generators(std::vector<Int> gens);
    static NumericalSemigroup from_elements(const std::vector<Int>& elements, Int tail_start);

    const std::vector<Int>& generators() const { return gens_; }
    Int multiplicity() const { return mult_; }
    Int conductor() const { return conductor_; }
    Int frobenius() const { return conductor_ - 1; }
    const std::vector<Int>& small_elements() const { return small_; }

    bool contains(Int z) const {
        if (z < 0) return false;
        if (z >= conductor_) return true;
        return std::binary_search(small_.begin(), small_.end(), z);
    }

    /// Elements of the complement (the gaps), all below the conductor.
    std::vector<Int> gaps() const {
        std::vector<Int> out;
        std::size_t k = 0;
        for (Int x = 0; x < conductor_; ++x) {
            if (k < small_.size() && small_[k] == x) { ++k; continue; }
            out.push_back(x);
        }
        return out;
    }

    /// Order of s in the filtration by powers of the maximal ideal M:
    /// the largest l with s in l*M (order(0) = 0).
    Int order(Int s) const;

    AperyTable apery(Int modulus) const;
    AperyTable apery() const { return apery(mult_); }

    /// The semigroup generated by {m, n_2 - m, ..., n_v - m}.
    NumericalSemigroup blowup() const;

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
    bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

private:
    NumericalSemigroup() = default;

    std::vector<Int> gens_;
    Int mult_ = 0;
    Int conductor_ = 0;
    std::vector<Int> small_;
};

inline NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
    if (gens.empty()) throw error(errc::empty_generators, "a semigroup needs at least one generator");
    for (Int g : gens) {
        if (g <= 0) throw error(errc::range_error, "generators must be positive, got " + std::to_string(g));
        checked(g);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) throw error(errc::gcd_not_one, "gcd of generators is " + std::to_string(g));

    NumericalSemigroup s;
    const Int n1 = gens.front(), nv = gens.back();
    // Frobenius(S) < n1*nv (Selmer's bound); window covers conductor plus the
    // range where minimal generators can live.
    const Int window = checked_add(checked_mul(n1, nv), 2 * n1 + 2);
    std::vector<char> member(static_cast<std::size_t>(window), 0);
    member[0] = 1;
    for (Int x = 1; x < window; ++x) {
        for (Int gen : gens) {
            if (x >= gen && member[static_cast<std::size_t>(x - gen)]) {
                member[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
    }

    Int frob = -1;
    for (Int x = 0; x < window; ++x)
        if (!member[static_cast<std::size_t>(x)]) frob = x;
    s.conductor_ = frob + 1;
    s.mult_ = n1;
    for (Int x = 0; x < s.conductor_; ++x)
        if (member[static_cast<std::size_t>(x)]) s.small_.push_back(x);

    // Minimal generators are the input generators not expressible as a sum of
    // two nonzero elements.
    for (Int cand : gens) {
        bool redundant = false;
        for (Int y = n1; y + n1 <= cand && !redundant; ++y)
            if (member[static_cast<std::size_t>(y)] && member[static_cast<std::size_t>(cand - y)])
                redundant = true;
        if (!redundant) s.gens_.push_back(cand);
    }
    return s;
}

inline NumericalSemigroup NumericalSemigroup::from_elements(const std::vector<Int>& elements, Int tail_start) {
    checked(tail_start);
    if (tail_start < 0) throw error(errc::range_error, "tail must start at a non-negative value");
    if (tail_start == 0) return from_generators({1}); // the set is all of the naturals
    std::vector<Int> sporadic;
    for (Int x : elements) {
        if (x < 0) throw error(errc::range_error, "semigroup elements must be non-negative");
        if (x < tail_start) sporadic.push_back(checked(x));
    }
    std::sort(sporadic.begin(), sporadic.end());
    sporadic.erase(std::unique(sporadic.begin(), sporadic.end()), sporadic.end());
    if (sporadic.empty() || sporadic.front() != 0)
        throw error(errc::range_error, "element set must contain 0");

    auto member = [&](Int z) {
        if (z >= tail_start) return true;
        return std::binary_search(sporadic.begin(), sporadic.end(), z);
    };

    // Additive closure on the window: sums of two sporadic elements that land
    // below the tail must be present.
    for (std::size_t i = 1; i < sporadic.size(); ++i)
        for (std::size_t j = i; j < sporadic.size(); ++j) {
            const Int sum = sporadic[i] + sporadic[j];
            if (sum < tail_start && !member(sum))
                throw error(errc::not_closed, std::to_string(sporadic[i]) + "+" + std::to_string(sporadic[j]) +
                                                  "=" + std::to_string(sum) + " missing from element set");
        }

    // Nonzero s is a generator iff s - t is not in the set for every nonzero
    // member t < s. Generators all lie below tail_start + multiplicity.
    Int mult = sporadic.size() > 1 ? sporadic[1] : tail_start;
    if (mult <= 0) throw error(errc::range_error, "no nonzero elements");
    std::vector<Int> gens;
    for (Int cand = mult; cand < tail_start + mult; ++cand) {
        if (!member(cand) || cand == 0) continue;
        bool decomposable = false;
        for (Int t = mult; t + mult <= cand && !decomposable; ++t)
            if (member(t) && member(cand - t)) decomposable = true;
        if (!decomposable) gens.push_back(cand);
    }
    return from_generators(std::move(gens));
}

inline Int NumericalSemigroup::order(Int s) const {
    if (!contains(s)) throw error(errc::not_member, std::to_string(s) + " is not an element");
    if (s == 0) return 0;
    std::vector<Int> ord(static_cast<std::size_t>(s) + 1, -1);
    ord[0] = 0;
    for (Int x = mult_; x <= s; ++x) {
        if (!contains(x)) continue;
        Int best = -1;
        for (Int g : gens_)
            if (x >= g && contains(x - g) && ord[static_cast<std::size_t>(x - g)] >= 0)
                best = std::max(best, ord[static_cast<std::size_t>(x - g)]);
        ord[static_cast<std::size_t>(x)] = best + 1;
    }
    return ord[static_cast<std::size_t>(s)];
}

inline AperyTable NumericalSemigroup::apery(Int modulus) const {
    if (modulus < 1) throw error(errc::range_error, "modulus must be positive");
    checked_add(conductor_, modulus);
    AperyTable t;
    t.modulus = modulus;
    t.entries.assign(static_cast<std::size_t>(modulus), -1);
    Int found = 0;
    auto visit = [&](Int x) {
        auto& e = t.entries[static_cast<std::size_t>(residue_of(x, modulus))];
        if (e < 0) { e = x; ++found; }
    };
    for (Int x : small_) {
        visit(x);
        if (found == modulus) return t;
    }
    for (Int x = conductor_; found < modulus; ++x) visit(x);
    return t;
}

inline NumericalSemigroup NumericalSemigroup::blowup() const {
    if (gens_.size() == 1) return *this; // whole N
    std::vector<Int> g;
    g.push_back(mult_);
    for (std::size_t i = 1; i < gens_.size(); ++i) g.push_back(gens_[i] - mult_);
    return from_generators(std::move(g));
}

} // namespace rrsgp
