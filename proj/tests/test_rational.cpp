#include <catch2/catch_amalgamated.hpp>

#include "ecokin/rational.hpp"

using ecokin::Rational;
using ecokin::exchange_chain;
using ecokin::validation_error;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(21, 12) == Rational(7, 4));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7, 4).num() == 7);
    CHECK(Rational(7, 4).den() == 4);
    CHECK_THROWS_AS(Rational(1, 0), validation_error);
}

TEST_CASE("rational arithmetic and ordering are exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 6) * Rational(3, 2) == Rational(7, 4));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(1, 2) <= Rational(1, 2));
    CHECK(Rational(10, 1) < Rational(11, 1));  // numeric, not textual, order
}

TEST_CASE("rational parsing accepts n and n/d forms") {
    CHECK(Rational::parse("7/6") == Rational(7, 6));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("x"), validation_error);
    CHECK_THROWS_AS(Rational::parse("1/2x"), validation_error);
    CHECK_THROWS_AS(Rational::parse(""), validation_error);
}

TEST_CASE("rational log2 matches the exact value") {
    CHECK(Rational(8).log2() == 3.0);
    CHECK(Rational(1, 4).log2() == -2.0);
    CHECK(Rational(1).log2() == 0.0);
    CHECK_THROWS_AS(Rational(0).log2(), validation_error);
    CHECK_THROWS_AS(Rational(-2).log2(), validation_error);
}

TEST_CASE("rational arithmetic rejects 64-bit overflow") {
    const Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * Rational(2), validation_error);
    CHECK_THROWS_AS(big + big, validation_error);
}

TEST_CASE("exchange chains compose proportions exactly") {
    CHECK(exchange_chain({Rational(7, 6), Rational(3, 2)}) == Rational(7, 4));
    CHECK(exchange_chain({Rational(5, 3)}) == Rational(5, 3));
    CHECK(exchange_chain({Rational(2), Rational(1, 2)}) == Rational(1));
    CHECK(exchange_chain({}) == Rational(1));
    CHECK_THROWS_AS(exchange_chain({Rational(7, 6), Rational(0)}),
                    validation_error);
    CHECK_THROWS_AS(exchange_chain({Rational(-1, 2)}), validation_error);
}
