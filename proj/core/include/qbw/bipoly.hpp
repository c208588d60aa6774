#pragma once

#include "qbw/rational.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace qbw {

/// Exponent pair of a monomial q^q_exp * u^u_exp.
struct Monomial {
  int q_exp = 0;
  int u_exp = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with q ranked above u.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const int ta = a.q_exp + a.u_exp;
    const int tb = b.q_exp + b.u_exp;
    if (ta != tb) return ta < tb;
    return a.q_exp < b.q_exp;
  }
};

/// Sparse bivariate polynomial in Q[q, u].
///
/// Invariant: no stored zero coefficients; the zero polynomial has an
/// empty term map.  Term iteration follows MonomialOrder ascending, so
/// rbegin() is the leading term.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  BiPoly() = default;
  explicit BiPoly(long c);
  explicit BiPoly(const Rational& c);

  static BiPoly variable_q();
  static BiPoly variable_u();
  /// q^a, a >= 0.
  static BiPoly q_power(int a);
  /// u^b, b >= 0.
  static BiPoly u_power(int b);
  /// c * q^a * u^b.
  static BiPoly term(const Rational& c, int q_exp, int u_exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// Constant term value; the polynomial need not be constant.
  Rational constant_value() const { return coeff(0, 0); }

  /// Highest q (resp. u) exponent present; -1 for the zero polynomial.
  int degree_q() const;
  int degree_u() const;
  /// Total degree of the leading monomial; -1 for zero.
  int total_degree() const;

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of q^q_exp * u^u_exp, zero when absent.
  Rational coeff(int q_exp, int u_exp) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;

  BiPoly scaled(const Rational& c) const;
  BiPoly pow(unsigned e) const;

  /// Leading term under MonomialOrder; both require a nonzero polynomial.
  Monomial leading_monomial() const;
  const Rational& leading_coeff() const;
  int leading_sign() const;
  /// Minimal term under MonomialOrder (the first one printed).
  Monomial trailing_monomial() const;
  const Rational& trailing_coeff() const;
  int trailing_sign() const;

  /// Positive rational c such that (1/c) * this has coprime integer
  /// coefficients.  Content of zero is 0.
  Rational content() const;
  /// this / (sign(lc) * content): integer coefficients, content 1, lc > 0.
  BiPoly primitive_part() const;

  Rational eval(const Rational& q_value, const Rational& u_value) const;
  /// Partial evaluation, leaving a polynomial in the other variable.
  BiPoly eval_q(const Rational& q_value) const;
  BiPoly eval_u(const Rational& u_value) const;

  /// q -> q^m, m >= 1.
  BiPoly subst_q_power(int m) const;
  /// u -> image.
  BiPoly subst_u(const BiPoly& image) const;

  /// Coefficients as a dense vector indexed by q-exponent (entries are
  /// polynomials in u), resp. by u-exponent.
  std::vector<BiPoly> coeffs_in_q() const;
  std::vector<BiPoly> coeffs_in_u() const;

  /// Canonical string: terms in ascending MonomialOrder, each rendered
  /// as coefficient*q^a*u^b with unit coefficients and zero exponents
  /// elided, e.g. "1-2*q+q^2*u".  Zero renders as "0".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const BiPoly& p);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

/// Exact quotient a / b.  Throws std::domain_error when b is zero or
/// does not divide a.
BiPoly divexact(const BiPoly& a, const BiPoly& b);

/// Divide every coefficient by a nonzero rational.
BiPoly divide_scalar(const BiPoly& a, const Rational& c);

/// Greatest common divisor up to units: the result is a primitive
/// integer polynomial with positive leading coefficient.  Nonzero
/// constants are units, so gcd(c, f) == 1.  gcd(0, f) == pp(f).
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace qbw
