#pragma once

#include <gmpxx.h>

#include <string>

namespace qbw {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always stored canonicalized
/// (gcd(num, den) == 1, den > 0, zero as 0/1).
using Rational = mpq_class;

/// Canonicalized rational num/den.  Throws std::domain_error on den == 0.
Rational make_rational(long num, long den);

/// Binomial coefficient C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// n!
Int factorial(unsigned long n);

/// Triangular number C(k, 2) = k(k-1)/2.
long choose2(long k);

/// Exact power with non-negative exponent.
Rational pow(const Rational& base, unsigned long e);

/// -1, 0 or +1.
int sign(const Rational& x);

/// Canonical decimal string, "num/den" or "num" when den == 1.
std::string to_string(const Rational& x);

/// Parses "num", "num/den" or decimal-free integer strings.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace qbw
