#include "qbw/rational.hpp"

#include <stdexcept>

namespace qbw {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

long choose2(long k) { return k * (k - 1) / 2; }

Rational pow(const Rational& base, unsigned long e) {
  Rational r(1);
  Rational b = base;
  unsigned long n = e;
  while (n > 0) {
    if (n & 1UL) r *= b;
    b *= b;
    n >>= 1UL;
  }
  return r;
}

int sign(const Rational& x) { return sgn(x); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: " + text);
  }
  r.canonicalize();
  return r;
}

}  // namespace qbw
