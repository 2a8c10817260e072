#include <doctest.h>

#include "rrsgp/semigroup.hpp"

using namespace rrsgp;

TEST_CASE("construction from generators") {
    const auto s = NumericalSemigroup::from_generators({6, 9, 11});
    CHECK(s.generators() == std::vector<Int>({6, 9, 11}));
    CHECK(s.multiplicity() == 6);
    CHECK(s.conductor() == 26);
    CHECK(s.small_elements() == std::vector<Int>({0, 6, 9, 11, 12, 15, 17, 18, 20, 21, 22, 23, 24}));

    const auto t = NumericalSemigroup::from_generators({4, 5, 11});
    CHECK(t.small_elements() == std::vector<Int>({0, 4, 5}));
    CHECK(t.conductor() == 8);
    CHECK(t.generators() == std::vector<Int>({4, 5, 11}));

    const auto nat = NumericalSemigroup::from_generators({1});
    CHECK(nat.conductor() == 0);
    CHECK(nat.frobenius() == -1);
    CHECK(nat.small_elements().empty());
}

TEST_CASE("redundant generators are dropped") {
    const auto a = NumericalSemigroup::from_generators({2, 3});
    const auto b = NumericalSemigroup::from_generators({2, 3, 4});
    CHECK(a == b);
    CHECK(b.generators() == std::vector<Int>({2, 3}));

    // order of the input does not matter either
    CHECK(NumericalSemigroup::from_generators({11, 6, 9, 20}) == NumericalSemigroup::from_generators({6, 9, 11}));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_WITH_AS(NumericalSemigroup::from_generators({}), doctest::Contains("at least one"), error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), error);
    try {
        NumericalSemigroup::from_generators({4, 6});
        FAIL("expected gcd error");
    } catch (const error& e) {
        CHECK(e.code() == errc::gcd_not_one);
    }
    try {
        NumericalSemigroup::from_generators({999983, 999979});
        FAIL("expected overflow");
    } catch (const error& e) {
        CHECK(e.code() == errc::overflow);
    }
}

TEST_CASE("membership") {
    const auto s = NumericalSemigroup::from_generators({4, 5, 7});
    CHECK(s.conductor() == 7);
    CHECK(!s.contains(6));
    CHECK(s.contains(0));
    CHECK(s.contains(4));
    CHECK(s.contains(100));
    CHECK(!s.contains(-3));

    const auto t = NumericalSemigroup::from_generators({6, 9, 11});
    CHECK(!t.contains(25));
    CHECK(t.contains(26));
}

TEST_CASE("apery tables") {
    const auto bt = NumericalSemigroup::from_generators({2, 9});
    CHECK(bt.apery(9).entries == std::vector<Int>({0, 10, 2, 12, 4, 14, 6, 16, 8}));

    CHECK(NumericalSemigroup::from_generators({1}).apery(5).entries == std::vector<Int>({0, 1, 2, 3, 4}));

    const auto s = NumericalSemigroup::from_generators({6, 9, 11});
    const auto ap = s.apery(6);
    CHECK(ap.entries == std::vector<Int>({0, 31, 20, 9, 22, 11}));
    for (Int i = 0; i < 6; ++i) {
        CHECK(ap.entries[static_cast<std::size_t>(i)] % 6 == i);
        CHECK(!s.contains(ap.entries[static_cast<std::size_t>(i)] - 6));
    }
}

TEST_CASE("frobenius from the apery table") {
    for (auto gens : {std::vector<Int>{6, 9, 11}, {4, 5, 11}, {4, 5, 7}, {2, 3}, {5, 7, 9, 11}}) {
        const auto s = NumericalSemigroup::from_generators(gens);
        CHECK(s.frobenius() == s.apery().max_entry() - s.multiplicity());
    }
}

TEST_CASE("blowup") {
    const auto t = NumericalSemigroup::from_generators({9, 11, 15, 17, 21, 23});
    const auto bt = t.blowup();
    CHECK(bt == NumericalSemigroup::from_generators({2, 9}));
    CHECK(bt.small_elements() == std::vector<Int>({0, 2, 4, 6}));
    CHECK(bt.conductor() == 8);

    CHECK(NumericalSemigroup::from_generators({1}).blowup() == NumericalSemigroup::from_generators({1}));

    // generators of the blow-up get re-minimalized
    CHECK(NumericalSemigroup::from_generators({6, 9, 11}).blowup() == NumericalSemigroup::from_generators({3, 5}));
}

TEST_CASE("construction from an element set") {
    const auto s = NumericalSemigroup::from_generators({6, 9, 11});
    // {0} union ({9,11}+S) listed below its tail
    const std::vector<Int> elements{0, 9, 11, 15, 17, 18, 20, 21, 22, 23, 24};
    const auto t = NumericalSemigroup::from_elements(elements, 26);
    CHECK(t.generators() == std::vector<Int>({9, 11, 15, 17, 21, 23}));

    CHECK(NumericalSemigroup::from_elements({0}, 1) == NumericalSemigroup::from_generators({1}));

    // round trip through the element listing
    for (auto gens : {std::vector<Int>{6, 9, 11}, {4, 5, 7}, {5, 8, 9}}) {
        const auto x = NumericalSemigroup::from_generators(gens);
        CHECK(NumericalSemigroup::from_elements(x.small_elements(), x.conductor()) == x);
    }

    try {
        NumericalSemigroup::from_elements({0, 3, 5}, 9); // 3+3=6 missing
        FAIL("expected closure failure");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_closed);
    }
}

TEST_CASE("order function") {
    const auto s = NumericalSemigroup::from_generators({6, 9, 11});
    CHECK(s.order(18) == 3);
    CHECK(s.order(0) == 0);
    CHECK(s.order(6) == 1);

    const auto t = NumericalSemigroup::from_generators({4, 5, 11});
    CHECK(t.order(11) == 1);
    CHECK(t.order(8) == 2);

    try {
        s.order(7);
        FAIL("expected membership failure");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_member);
    }
}

TEST_CASE("order is superadditive") {
    for (auto gens : {std::vector<Int>{6, 9, 11}, {4, 5, 11}, {5, 7, 9}}) {
        const auto s = NumericalSemigroup::from_generators(gens);
        const auto& small = s.small_elements();
        for (Int x : small)
            for (Int y : small)
                CHECK(s.order(x + y) >= s.order(x) + s.order(y));
    }
}

TEST_CASE("gaps") {
    const auto s = NumericalSemigroup::from_generators({4, 5, 7});
    CHECK(s.gaps() == std::vector<Int>({1, 2, 3, 6}));
    CHECK(NumericalSemigroup::from_generators({1}).gaps().empty());
}
