#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_util.hpp"
#include "zharm/cover.hpp"

using namespace zharm;
using namespace zharm::cover;
using laurent::LaurentPoly;
using laurent::UnitClass;

namespace {
UnitClass cls(const char* text) { return laurent::normalize(laurent::parse_poly(text)); }
UnitClass times_t_minus_1(const char* text) {
    return laurent::normalize(laurent::parse_poly(text) * laurent::parse_poly("t-1"));
}
}  // namespace

TEST_CASE("link_determinant") {
    CHECK(link_determinant(cls("1-t+t^2")) == 3);
    CHECK(link_determinant(cls("-1+t")) == 2);
    CHECK(link_determinant(times_t_minus_1("-t-t^2+t^3+t^4")) == 0);
    CHECK(link_determinant(UnitClass{}) == 0);
}

TEST_CASE("homology_order") {
    CHECK(homology_order(times_t_minus_1("-t-t^2+t^3+t^4"), 3) == 9);
    CHECK(homology_order(times_t_minus_1("-1+t^2-t^3+t^5"), 3) == 36);
    CHECK(homology_order(cls("1-t+t^2"), 3) == 4);
    CHECK(homology_order(cls("1-t+t^2"), 2) == 3);
    CHECK(homology_order(UnitClass{}, 3) == 0);
    CHECK_THROWS_AS(homology_order(cls("1+t"), 1), std::invalid_argument);
    CHECK_THROWS_AS(homology_order(cls("1+t"), 65), std::invalid_argument);
}

TEST_CASE("homology_order and determinant are unit invariant") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> shift(-5, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly f = test::random_poly(rng, 8, 9);
        LaurentPoly g = f.shifted(shift(rng));
        if (sign(rng)) g = -g;
        for (int k = 2; k <= 4; ++k)
            CHECK(homology_order(laurent::normalize(f), k) ==
                  homology_order(laurent::normalize(g), k));
        CHECK(link_determinant(laurent::normalize(f)) ==
              link_determinant(laurent::normalize(g)));
    }
}

TEST_CASE("criterion verdicts") {
    const auto qhs = criterion(times_t_minus_1("-t-t^2+t^3+t^4"));
    CHECK(qhs.determinant == 0);
    CHECK(qhs.order3 == 9);
    CHECK(qhs.b1_s2_positive);
    CHECK(qhs.qhs3);
    CHECK(qhs.conclusion == Conclusion::EXISTS_QHS);

    const auto knot = criterion(cls("1-t+t^2"));
    CHECK(knot.determinant == 3);
    CHECK(knot.conclusion == Conclusion::NO_CRITERION);

    const auto zero = criterion(UnitClass{});
    CHECK(zero.determinant == 0);
    CHECK(zero.order3 == 0);
    CHECK(zero.conclusion == Conclusion::EXISTS_B1_POSITIVE);

    // a knot cannot have determinant zero
    CHECK_THROWS_AS(criterion(times_t_minus_1("-t-t^2+t^3+t^4"), 1), DataError);
    CHECK(criterion(cls("1-t+t^2"), 1).conclusion == Conclusion::NO_CRITERION);
}

TEST_CASE("criterion verdict coherence on random inputs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly f = test::random_poly(rng, 10, 9);
        if (trial % 7 == 0) f = f * laurent::parse_poly("t-1");  // force some det-0 cases
        const auto v = criterion(laurent::normalize(f));
        CHECK(v.b1_s2_positive == (v.determinant == 0));
        CHECK(v.order2 == v.determinant);
        CHECK(v.qhs3 == (v.order3 != 0));
        if (v.determinant != 0)
            CHECK(v.conclusion == Conclusion::NO_CRITERION);
        else
            CHECK(v.conclusion ==
                  (v.qhs3 ? Conclusion::EXISTS_QHS : Conclusion::EXISTS_B1_POSITIVE));
    }
}

TEST_CASE("compose") {
    CHECK(compose(cls("1-t+t^2"), cls("1-t+t^2")) == cls("1-2t+3t^2-2t^3+t^4"));
    CHECK(compose(cls("-t-t^2+t^3+t^4"), cls("1")) == cls("-t-t^2+t^3+t^4"));
    CHECK(compose(UnitClass{}, cls("1+t")).is_zero());
}

TEST_CASE("homology_order is multiplicative under compose") {
    std::mt19937 rng(43);
    for (int k = 2; k <= 6; ++k)
        for (int trial = 0; trial < 30; ++trial) {
            const auto d1 = laurent::normalize(test::random_poly(rng, 7, 9));
            const auto d2 = laurent::normalize(test::random_poly(rng, 7, 9));
            CHECK(homology_order(compose(d1, d2), k) ==
                  homology_order(d1, k) * homology_order(d2, k));
        }
}

TEST_CASE("consistency with the determinant at k = 2") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = laurent::normalize(test::random_poly(rng, 10, 9));
        CHECK(homology_order(d, 2) == link_determinant(d));
    }
}

TEST_CASE("family growth and distinctness") {
    const auto base = times_t_minus_1("-t-t^2+t^3+t^4");
    CHECK(family_order(base, 0, 3) == homology_order(base, 3));
    CHECK(family_order(base, 1, 3) == 36);
    const auto base48 = times_t_minus_1("-1-2t^3-t^6");
    CHECK(family_order(base48, 2, 3) == 768);

    BigInt expected = homology_order(base, 3);
    BigInt prev = -1;
    for (int n = 0; n <= 6; ++n) {
        const BigInt got = family_order(base, n, 3);
        CHECK(got == expected);
        CHECK(got > prev);  // strictly increasing: the family members differ
        prev = got;
        expected *= 4;
    }
    CHECK_THROWS_AS(family_order(base, -1, 3), std::invalid_argument);
}

TEST_CASE("family growth holds over random bases") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const auto d = laurent::normalize(test::random_poly(rng, 8, 9));
        const BigInt base = family_order(d, 0, 3);
        BigInt expected = base;
        for (int n = 0; n <= 3; ++n) {
            CHECK(family_order(d, n, 3) == expected);
            expected *= 4;
        }
    }
}
