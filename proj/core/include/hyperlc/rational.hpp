#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperlc {

// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
// terms with a positive denominator; values built from raw parts go through
// make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" and finite decimals such as "-1.25".
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Rational abs_value(const Rational& value);

// Floating approximation, for rendering only.
double to_double(const Rational& value);

}  // namespace hyperlc
