#pragma once

#include "rrsgp/ideal.hpp"

namespace rrsgp {

/// The parametric family S_n = <a, b, d, c_3, ..., c_n> with a = 2n,
/// b = 4n - 1, d = n(2n - 1), c_h = (n + h)(2n - 1) + 1, together with the
/// ideal E_n generated by every generator except d. Its reduction number is
/// n - 1 while every power is closed, which makes it the standard stress case
/// for the closure pipeline.
struct FamilyInstance {
    Int n = 0;
    Int a = 0;
    Int b = 0;
    Int d = 0;
    std::vector<Int> c; ///< c_3 .. c_n
    NumericalSemigroup s;
    RelativeIdeal e;
};

inline FamilyInstance family_instance(Int n) {
    if (n < 3) throw error(errc::range_error, "family index starts at 3");
    const Int a = 2 * n;
    const Int b = 4 * n - 1;
    const Int d = checked_mul(n, 2 * n - 1);
    std::vector<Int> c;
    for (Int h = 3; h <= n; ++h) c.push_back(checked_add(checked_mul(n + h, 2 * n - 1), 1));

    std::vector<Int> sgp_gens{a, b, d};
    sgp_gens.insert(sgp_gens.end(), c.begin(), c.end());
    std::vector<Int> ideal_gens{a, b};
    ideal_gens.insert(ideal_gens.end(), c.begin(), c.end());

    auto s = NumericalSemigroup::from_generators(sgp_gens);
    RelativeIdeal e(s, ideal_gens);
    return FamilyInstance{n, a, b, d, std::move(c), std::move(s), std::move(e)};
}

} // namespace rrsgp
