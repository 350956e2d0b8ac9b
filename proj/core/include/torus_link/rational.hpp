#pragma once

// Exact scalar backend: arbitrary-precision integers and rationals.
// cpp_rational keeps values in lowest terms with a positive denominator, which
// is exactly the representation contract the library relies on. No routine in
// the exact modules ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "torus_link/errors.hpp"

namespace torus_link {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Unique representative of x mod 1 in [0,1). Exact and idempotent.
Rational frac(const Rational& x);

// Largest integer <= x.
Integer floor_rational(const Rational& x);

// Smallest integer >= x.
Integer ceil_rational(const Rational& x);

// True iff x is an integer (denominator 1).
bool is_integer(const Rational& x);

double to_double(const Rational& x);
double to_double(const Integer& x);

// Parses "p" or "p/q" with optional leading sign. Throws ValidationError on
// malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const Rational& x);

std::string format_integer(const Integer& x);

}  // namespace torus_link
