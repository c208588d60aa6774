#pragma once

#include "qbw/bipoly.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qbw {

/// Evaluation hit a zero of the denominator.  Carries the vanishing
/// denominator in canonical string form.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, std::string denominator)
      : std::domain_error(what), denominator_(std::move(denominator)) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

/// Rational function in Q(q, u), always canonical:
/// - denominator nonzero, numerator/denominator coprime,
/// - denominator a primitive integer polynomial whose minimal term
///   under the graded-lex q > u order has a positive coefficient,
/// - zero stored as 0/1.
/// Equality is plain data comparison of the two polynomials.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1L) {}
  RatFunc(long c) : num_(c), den_(1L) {}
  RatFunc(const Rational& c) : num_(c), den_(1L) {}
  explicit RatFunc(const BiPoly& p) : num_(p), den_(1L) {}
  /// Normalizing constructor; throws std::domain_error on a zero
  /// denominator.
  RatFunc(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  /// 1/this; throws std::domain_error when zero.
  RatFunc inverse() const;
  /// Integer power; negative exponents invert first.
  RatFunc pow(int e) const;

  /// Full evaluation.  Throws PoleError when the denominator vanishes.
  Rational eval(const Rational& q_value, const Rational& u_value) const;
  /// Partial evaluation at q = q_value; result is a function of u.
  RatFunc eval_q(const Rational& q_value) const;

  /// q -> q^m, m >= 1.
  RatFunc subst_q_power(int m) const;
  /// u -> image (a polynomial).
  RatFunc subst_u(const BiPoly& image) const;

  /// Canonical string "num" or "num/den"; a side is parenthesized when
  /// it has more than one term.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  enum class Reduced { No, Yes };
  RatFunc(BiPoly num, BiPoly den, Reduced reduced);
  void normalize(Reduced reduced);

  BiPoly num_;
  BiPoly den_;
};

}  // namespace qbw
