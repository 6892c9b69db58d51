#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lowprev {

// Exact arithmetic throughout: every quantity in this library is a rational
// number, never a float.  Equalities asserted by the test suites are exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q" or a plain integer, with optional sign.  Throws ParseError.
Rational parse_rational(const std::string& text);

/// Canonical rendering: lowest terms, "/1" omitted ("0", "-2/3", "5").
std::string to_string(const Rational& value);

/// Positional decimal rendering with `significant` significant digits,
/// rounded half to even.  Zero renders as "0." followed by `significant`
/// zeros.
std::string to_decimal(const Rational& value, int significant = 20);

Int factorial(int n);
Int binomial(int n, int k);

/// base^exponent for exponent >= 0, with the convention 0^0 = 1.
Rational pow_rational(const Rational& base, int exponent);

}  // namespace lowprev
