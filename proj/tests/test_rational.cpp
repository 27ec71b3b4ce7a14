// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>

#include "rational.hpp"

using wilf::Error;
using wilf::ErrorCode;
using wilf::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational::of(2, 4) == Rational::of(1, 2));
    CHECK(Rational::of(2, 4).num() == 1);
    CHECK(Rational::of(2, 4).den() == 2);
    CHECK(Rational::of(-2, 4).num() == -1);
    CHECK(Rational::of(2, -4).num() == -1);
    CHECK(Rational::of(2, -4).den() == 2);
    CHECK(Rational::of(-6, -4) == Rational::of(3, 2));
    CHECK(Rational::of(0, 7).num() == 0);
    CHECK(Rational::of(0, 7).den() == 1);
    CHECK(Rational{} == Rational::of(0, 1));
    Rational five = 5; // implicit integer conversion
    CHECK(five == Rational::of(5, 1));
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_WITH_AS(Rational::of(3, 0), "zero denominator", Error);
    try {
        Rational::of(1, 0);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational::of(1, 3) + Rational::of(1, 6) == Rational::of(1, 2));
    CHECK(Rational::of(1, 2) - Rational::of(1, 3) == Rational::of(1, 6));
    CHECK(Rational::of(2, 3) * Rational::of(3, 4) == Rational::of(1, 2));
    CHECK(Rational(1) - Rational::of(1, 3) == Rational::of(2, 3));
    CHECK(Rational::of(-1, 2) + Rational::of(1, 2) == Rational(0));
    // 1/3 computed three different ways stays identical
    CHECK(Rational::of(1, 3) == Rational::of(100, 300));
    CHECK((Rational::of(1, 6) + Rational::of(1, 6)) == Rational::of(1, 3));
}

TEST_CASE("ordering uses cross multiplication, not floats") {
    CHECK(Rational::of(1, 3) < Rational::of(1, 2));
    CHECK(Rational::of(-1, 2) < Rational::of(-1, 3));
    CHECK(Rational::of(2, 5) > Rational::of(1, 3));
    CHECK(Rational::of(7, 21) <= Rational::of(1, 3));
    CHECK(Rational::of(7, 21) >= Rational::of(1, 3));
    // Indistinguishable in double precision, distinct exactly.
    const std::int64_t big = std::int64_t{1} << 60;
    CHECK(Rational::of(big, big + 1) < Rational::of(big + 1, big + 2));
    CHECK(Rational::of(INT64_MAX, 2) > Rational::of(INT64_MAX - 1, 2));
}

TEST_CASE("overflow during narrowing raises instead of wrapping") {
    Rational huge = Rational::of(INT64_MAX, 1);
    CHECK_THROWS_AS(huge + huge, Error);
    try {
        huge* Rational::of(3, 1);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
    // Large but reducible products survive.
    Rational r = Rational::of(INT64_MAX, 3) * Rational::of(3, INT64_MAX);
    CHECK(r == Rational(1));
}

TEST_CASE("sign, is_zero, str") {
    CHECK(Rational::of(2, 5).sign() == 1);
    CHECK(Rational::of(-2, 5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational::of(1, 9).is_zero());
    CHECK(Rational::of(2, 5).str() == "2/5");
    CHECK(Rational::of(-1, 2).str() == "-1/2");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational::of(6, 2).str() == "3");
}

TEST_CASE("field axioms hold on a random grid") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 50);
    for (int i = 0; i < 2000; ++i) {
        Rational a = Rational::of(num(rng), den(rng));
        Rational b = Rational::of(num(rng), den(rng));
        Rational c = Rational::of(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        // total order consistent with subtraction sign
        CHECK(((a < b) == ((a - b).sign() < 0)));
        CHECK(((a == b) == (a - b).is_zero()));
    }
}
