#pragma once

#include <gmpxx.h>

#include <string>

namespace mq {

/// Exact rational scalar backed by GMP. Values produced through this
/// header's helpers are always in lowest terms with a positive
/// denominator, and arithmetic never rounds.
using Rational = mpq_class;

/// Arbitrary-size integer.
using Integer = mpz_class;

/// Canonical rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses an integer ("8"), a fraction ("-3/4"), or a decimal literal
/// ("0.125", "2.5e-3"). Decimal text converts exactly; it never passes
/// through a double.
Rational rational_from_string(const std::string& text);

/// "p/q", or just "p" when the denominator is one.
std::string rational_to_string(const Rational& r);

/// Exact value of a finite double (every finite double is dyadic).
Rational rational_from_double(double v);

/// base^exp; exp may be negative when base is nonzero.
Rational rational_pow(const Rational& base, long exp);

Integer rational_ceil(const Rational& r);
Integer rational_floor(const Rational& r);
bool is_integer(const Rational& r);

/// Double approximation (GMP conversion, truncating).
double to_double(const Rational& r);

}  // namespace mq
