#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lpb {

// The universal scalar of the library: every LP and Krawtchouk computation is
// carried out in exact rational arithmetic. mpq_class keeps values canonical
// (positive denominator, gcd(num, den) = 1).
using Integer = mpz_class;
using Rational = mpq_class;

/// n choose k as an exact integer; 0 when k < 0 or k > n.
Integer binomial(unsigned long n, long k);

/// The unique r >= 0 with r^2 <= m < (r+1)^2. Throws std::domain_error for m < 0.
Integer isqrt_floor(const Integer& m);

/// 2^n as an exact integer.
Integer pow2(unsigned long n);

/// -p log2 p - (1-p) log2 (1-p) with the convention 0 log2 0 = 0.
/// Throws std::domain_error outside [0, 1].
double binary_entropy(double p);

/// Floor of a rational, toward minus infinity.
Integer rational_floor(const Rational& r);

/// log2 of a positive rational as a double. Throws std::domain_error for r <= 0.
double rational_log2(const Rational& r);

/// Renders a rational as "numerator/denominator", e.g. "16/1", "-3/4".
std::string rational_to_string(const Rational& r);

/// Parses "p/q" or "p" into a canonical rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational rational_from_string(std::string_view s);

}  // namespace lpb
