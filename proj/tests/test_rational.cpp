#include <doctest.h>

#include "tda/rational.hpp"

using namespace tda;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 0), input_error);
}

TEST_CASE("rational parse and print round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse(Rational(-22, 7).str()) == Rational(-22, 7));
    CHECK_THROWS_AS(Rational::parse("x"), input_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), input_error);
}

TEST_CASE("extended values order and shift") {
    Ext ni = Ext::neg_inf(), pi = Ext::pos_inf();
    CHECK(ni < Ext(Rational(0)));
    CHECK(Ext(Rational(0)) < pi);
    CHECK(ni < pi);
    CHECK_FALSE(pi < pi);
    CHECK(pi + Rational(7) == pi);
    CHECK(ni - Rational(7) == ni);
    CHECK(Ext(Rational(1)) + Rational(1, 2) == Ext(Rational(3, 2)));
    CHECK(Ext::parse("inf") == pi);
    CHECK(Ext::parse("-inf") == ni);
    CHECK(Ext::parse("2/3") == Ext(Rational(2, 3)));
    CHECK(pi.str() == "inf");
}

TEST_CASE("gap convention for infinities") {
    Ext ni = Ext::neg_inf(), pi = Ext::pos_inf();
    CHECK(gap(pi, pi) == Ext(Rational(0)));
    CHECK(gap(ni, ni) == Ext(Rational(0)));
    CHECK(gap(pi, ni) == pi);
    CHECK(gap(pi, Ext(Rational(3))) == pi);
    CHECK(gap(Ext(Rational(1)), Ext(Rational(4))) == Ext(Rational(3)));
}

TEST_CASE("limit comparison") {
    CHECK(le_limit(Ext(Rational(1000000)), Ext::pos_inf()));
    CHECK_FALSE(le_limit(Ext::pos_inf(), Ext::pos_inf()));
    CHECK(le_limit(Ext(Rational(1)), Ext(Rational(1))));
    CHECK_FALSE(le_limit(Ext(Rational(2)), Ext(Rational(1))));
    CHECK(le_limit(Ext::neg_inf(), Ext(Rational(0))));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS(big * big);
}
