#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_util.hpp"
#include "zharm/laurent.hpp"

using namespace zharm;
using namespace zharm::laurent;

namespace {
LaurentPoly P(const char* text) { return parse_poly(text); }
BigInt abs_resultant(const LaurentPoly& f, const LaurentPoly& g) {
    BigInt r = resultant(f, g);
    return r < 0 ? BigInt(-r) : r;
}
}  // namespace

TEST_CASE("addition") {
    CHECK((P("t") + P("-t")).is_zero());
    CHECK(P("1-t+t^2") + LaurentPoly{} == P("1-t+t^2"));
    CHECK(P("-t-t^2+t^3+t^4") + P("t+t^2") == P("t^3+t^4"));
}

TEST_CASE("multiplication") {
    CHECK(P("t-1") * P("1+t+t^2") == P("t^3-1"));
    // Hand convolution oracle for the squared trefoil polynomial.
    const auto conv = test::convolve({1, -1, 1}, {1, -1, 1});
    LaurentPoly expect;
    for (size_t i = 0; i < conv.size(); ++i) expect.set_coeff(static_cast<int>(i), conv[i]);
    CHECK(P("1-t+t^2") * P("1-t+t^2") == expect);
    CHECK(expect == P("1-2t+3t^2-2t^3+t^4"));
    CHECK(P("t-1") * P("-t-t^2+t^3+t^4") == P("t-2t^3+t^5"));
    CHECK((P("1+t") * LaurentPoly{}).is_zero());
}

TEST_CASE("eval_int") {
    CHECK(eval_int(P("1-t+t^2"), BigInt(-1)) == BigRat(3));
    CHECK(eval_int(P("-t-t^2+t^3+t^4"), BigInt(-1)) == BigRat(0));
    CHECK(eval_int(P("t^-1+1"), BigInt(2)) == BigRat(3, 2));
    CHECK_THROWS_AS(eval_int(P("1+t"), BigInt(0)), std::invalid_argument);
}

TEST_CASE("eval_int is a ring homomorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pts(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = test::random_poly(rng, 6, 9).shifted(trial % 3 - 1);
        const auto g = test::random_poly(rng, 6, 9);
        int x = pts(rng);
        if (x == 0) x = 2;
        CHECK(eval_int(f * g, BigInt(x)) == eval_int(f, BigInt(x)) * eval_int(g, BigInt(x)));
    }
}

TEST_CASE("normalize canonical form") {
    CHECK(normalize(P("-t-t^2+t^3+t^4")).canonical() == P("-1-t+t^2+t^3"));
    CHECK(normalize(-P("t^2-t+1")).canonical() == P("1-t+t^2"));
    CHECK(normalize(LaurentPoly{}).canonical().is_zero());
}

TEST_CASE("normalize idempotence and unit invariance") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> shift(-6, 6);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = test::random_poly(rng, 8, 9);
        const auto n = normalize(f);
        CHECK(normalize(n.canonical()) == n);
        LaurentPoly unit_mult = f.shifted(shift(rng));
        if (sign(rng)) unit_mult = -unit_mult;
        CHECK(normalize(unit_mult) == n);
    }
}

TEST_CASE("cyclotomic_column") {
    CHECK(cyclotomic_column(2) == P("1+t"));
    CHECK(cyclotomic_column(3) == P("1+t+t^2"));
    CHECK(eval_int(cyclotomic_column(3), BigInt(1)) == BigRat(3));
    CHECK_THROWS_AS(cyclotomic_column(1), std::invalid_argument);
}

TEST_CASE("resultant examples") {
    const auto nu3 = cyclotomic_column(3);
    CHECK(abs_resultant(nu3, P("t-1")) == 3);
    CHECK(abs_resultant(nu3, P("1-t+t^2")) == 4);
    CHECK(abs_resultant(nu3, P("-1-2t^3-t^6")) == 16);
    CHECK_THROWS_AS(resultant(nu3, LaurentPoly{}), std::invalid_argument);
    CHECK_THROWS_AS(resultant(LaurentPoly{}, nu3), std::invalid_argument);
    CHECK_THROWS_AS(resultant(nu3, P("t^-1+1")), std::invalid_argument);
}

TEST_CASE("resultant multiplicativity") {
    std::mt19937 rng(13);
    for (int k = 2; k <= 6; ++k) {
        const auto nuk = cyclotomic_column(k);
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = test::random_poly(rng, 8, 9);
            const auto g = test::random_poly(rng, 8, 9);
            CHECK(abs_resultant(nuk, f * g) == abs_resultant(nuk, f) * abs_resultant(nuk, g));
        }
    }
}

TEST_CASE("resultant agrees with the float root-product oracle") {
    std::mt19937 rng(17);
    for (int k = 2; k <= 6; ++k) {
        const auto nuk = cyclotomic_column(k);
        for (int trial = 0; trial < 60; ++trial) {
            const auto f = test::random_poly(rng, 8, 9);
            const double exact = abs_resultant(nuk, f).convert_to<double>();
            const double oracle = test::root_product_abs(f, k);
            CHECK(std::abs(exact - oracle) <= 1e-6 * std::max(1.0, exact));
        }
    }
}

TEST_CASE("resultant against nu_2 is evaluation at -1") {
    std::mt19937 rng(19);
    const auto nu2 = cyclotomic_column(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = test::random_poly(rng, 10, 9);
        BigInt v = boost::multiprecision::numerator(eval_int(f, BigInt(-1)));
        if (v < 0) v = -v;
        CHECK(abs_resultant(nu2, f) == v);
    }
}

TEST_CASE("divide_exact") {
    CHECK(divide_exact(P("t^3+1"), P("t+1")) == P("t^2-t+1"));
    const auto p = P("-t-t^2+t^3+t^4");
    CHECK(divide_exact(P("t-1") * p, P("t-1")) == p);
    try {
        divide_exact(P("t^2+1"), P("t+1"));
        FAIL("expected InexactDivisionError");
    } catch (const InexactDivisionError& e) {
        const std::map<int, BigInt> expect{{0, BigInt(2)}};
        CHECK(e.remainder_terms() == expect);
    }
    CHECK_THROWS_AS(divide_exact(P("t"), LaurentPoly{}), std::invalid_argument);
    // Laurent quotients work through the unit shift.
    CHECK(divide_exact(P("t^-1+1"), P("1+t")) == P("t^-1"));
}

TEST_CASE("polynomial text grammar round-trips") {
    const char* samples[] = {
        "-t-t^2+t^3+t^4", "-1+t^2-t^3+t^5",  "1-2t^2+t^4",
        "-1-2t^3-t^6",    "2t^3+t^2+t^4",    "1-3t^2-2t+3t^3+2t^4-t^5",
        "-1-t^3+t^4+t^7", "-t^2-t+t^6+t^5",  "2t+4t^3-2t^5",
        "-1+2t+t^2-4t^3+t^4+2t^5-t^6",
    };
    for (const char* s : samples) {
        const auto f = P(s);
        CHECK(parse_poly(to_string(f)) == f);
    }
    CHECK(P(" 3 * t ^ 2 - 1") == P("3t^2-1"));
    CHECK(P("t^-2") == LaurentPoly::term(1, -2));
    CHECK(P("0").is_zero());
    CHECK(to_string(LaurentPoly{}) == "0");
    CHECK(parse_poly(to_string(LaurentPoly{})).is_zero());
    CHECK(to_string(P("-1+t")) == "-1+t");
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("1++t"), ParseError);
    CHECK_THROWS_AS(P("x+1"), ParseError);
    CHECK_THROWS_AS(P("3^2"), ParseError);
}

TEST_CASE("serialization round-trips on random Laurent polynomials") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = test::random_poly(rng, 9, 9).shifted(trial % 7 - 3);
        CHECK(parse_poly(to_string(f)) == f);
    }
}
