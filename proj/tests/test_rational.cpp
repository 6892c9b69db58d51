#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lowprev/errors.hpp"
#include "lowprev/rational.hpp"

using namespace lowprev;

TEST_CASE("parsing accepts p/q and integers") {
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/3"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("canonical rendering omits /1") {
    CHECK(to_string(Rational(4, 6)) == "2/3");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(-8, 2)) == "-4");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("decimal rendering with 20 significant digits") {
    CHECK(to_decimal(Rational(0)) == "0.00000000000000000000");
    CHECK(to_decimal(Rational(2, 3)) == "0.66666666666666666667");
    CHECK(to_decimal(Rational(1, 2)) == "0.50000000000000000000");
    CHECK(to_decimal(Rational(1)) == "1.0000000000000000000");
    CHECK(to_decimal(Rational(-1, 3)) == "-0.33333333333333333333");
    CHECK(to_decimal(Rational(1, 8)) == "0.12500000000000000000");
    CHECK(to_decimal(Rational(123, 1)) == "123.00000000000000000");
    CHECK(to_decimal(Rational(1, 1000)) == "0.0010000000000000000000");
    CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
    CHECK(to_decimal(Rational(2, 3), 5) == "0.66667");
    // Carrying rounds into the next magnitude.
    CHECK(to_decimal(Rational(9999, 10000), 3) == "1.00");
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(pow_rational(Rational(0), 0) == 1);
    CHECK(pow_rational(Rational(1, 2), 3) == Rational(1, 8));
}
