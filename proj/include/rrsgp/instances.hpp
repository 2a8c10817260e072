#pragma once

#include <random>

#include "rrsgp/ideal.hpp"

namespace rrsgp {

/// Reproducible random instance corpus: small semigroups with a handful of
/// generators, ideals generated inside them. Same seed, same instances, on
/// any platform (mt19937_64 with modulo reduction).
struct InstanceParams {
    std::uint64_t seed = 42;
    Int count = 500;
    Int mult_min = 3;
    Int mult_max = 12;
    Int sgp_gen_bound = 60;  ///< semigroup generators drawn below this
    Int max_sgp_gens = 5;
    Int max_ideal_gens = 4;
    Int ideal_gen_margin = 40; ///< ideal generators drawn below conductor + margin
};

struct Instance {
    std::vector<Int> sgp_gens;   ///< as drawn, possibly redundant
    std::vector<Int> ideal_gens; ///< elements of the semigroup, possibly redundant
};

class InstanceGenerator {
public:
    explicit InstanceGenerator(const InstanceParams& params) : p_(params), rng_(params.seed) {}

    Instance next() {
        for (;;) {
            const Int m = uniform(p_.mult_min, p_.mult_max);
            std::vector<Int> gens{m};
            const Int extra = uniform(1, p_.max_sgp_gens - 1);
            for (Int i = 0; i < extra; ++i) gens.push_back(uniform(m + 1, p_.sgp_gen_bound - 1));
            std::sort(gens.begin(), gens.end());
            gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
            Int g = 0;
            for (Int x : gens) g = std::gcd(g, x);
            if (g != 1) continue;

            const auto s = NumericalSemigroup::from_generators(gens);
            Instance inst;
            inst.sgp_gens = std::move(gens);
            const Int n_ideal = uniform(1, p_.max_ideal_gens);
            for (Int i = 0; i < n_ideal; ++i) inst.ideal_gens.push_back(draw_element(s));
            std::sort(inst.ideal_gens.begin(), inst.ideal_gens.end());
            return inst;
        }
    }

private:
    Int uniform(Int lo, Int hi) { // inclusive bounds
        if (hi < lo) throw error(errc::range_error, "instance parameter bounds are inverted");
        return lo + static_cast<Int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Int draw_element(const NumericalSemigroup& s) {
        const Int lo = s.multiplicity();
        const Int hi = s.conductor() + p_.ideal_gen_margin - 1;
        for (int tries = 0; tries < 64; ++tries) {
            const Int z = uniform(lo, hi);
            if (s.contains(z)) return z;
        }
        return s.conductor() + uniform(0, p_.ideal_gen_margin - 1);
    }

    InstanceParams p_;
    std::mt19937_64 rng_;
};

} // namespace rrsgp
