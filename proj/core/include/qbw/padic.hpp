#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbw/identity.hpp"
#include "qbw/rational.hpp"

namespace qbw {

/// Fixed-precision p-adic integer: a residue modulo p^M for an odd prime p
/// and working precision M >= 1.  All arithmetic is exact modulo p^M.
class PadicInt {
 public:
  PadicInt(long p, int precision, Int value);

  long prime() const { return p_; }
  int precision() const { return precision_; }
  /// Residue in [0, p^M).
  const Int& residue() const { return residue_; }
  const Int& modulus() const { return modulus_; }

  bool is_zero() const { return residue_ == 0; }

  /// Exponent of the largest power of p dividing the residue.  Saturates at
  /// the working precision: the zero residue reports M, meaning ">= M".
  int valuation() const;

  PadicInt& operator+=(const PadicInt& o);
  PadicInt& operator-=(const PadicInt& o);
  PadicInt& operator*=(const PadicInt& o);

  friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
  friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
  friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }
  PadicInt operator-() const;

  PadicInt pow(long e) const;

  /// Multiplicative inverse modulo p^M; requires a unit (valuation 0).
  PadicInt inverse() const;

  bool operator==(const PadicInt& o) const;
  bool operator!=(const PadicInt& o) const { return !(*this == o); }

  /// Decimal string of the residue.
  std::string str() const;

 private:
  /// Truncate both operands to the smaller precision before combining.
  void align(const PadicInt& o);

  long p_;
  int precision_;
  Int modulus_;
  Int residue_;
};

/// A point q of the p-adic domain restricted to the convergence region
/// |q-1|_p < p^(-1/(p-1)); for odd p this is exactly v_p(q-1) >= 1.
class QPoint {
 public:
  /// Throws std::domain_error unless p is an odd prime, precision >= 1, and
  /// v_p(q-1) >= 1 (the |q-1|_p region condition).
  QPoint(long p, int precision, long q);

  long prime() const { return p_; }
  int precision() const { return precision_; }
  /// The plain integer q, for exact rational reference values.
  long q_integer() const { return q_int_; }
  /// q as a residue modulo p^M.
  const PadicInt& q() const { return q_; }
  /// q^e modulo p^M for e >= 0.
  PadicInt q_pow(const Int& e) const;

 private:
  long p_;
  int precision_;
  long q_int_;
  PadicInt q_;
};

/// One level of the Riemann-sum functional: numerator sum_{x<p^N} f(x) q^x
/// and denominator 1 + q + ... + q^(p^N - 1), both modulo p^M.  Dividing
/// costs `loss` = v(denominator) digits of precision; `value` holds the
/// quotient at precision M - loss whenever the numerator's valuation covers
/// the loss (otherwise the quotient has a pole-like negative valuation and
/// only cross-multiplied comparisons are meaningful).
struct RiemannSum {
  PadicInt numerator;
  PadicInt denominator;
  int level = 0;
  int loss = 0;
  std::optional<PadicInt> value;
};

/// Evaluates one Riemann level of the q-measure functional.  `f` is sampled
/// at x = 0..p^level - 1 and must return values at the point's prime.
/// `jobs` splits the x-range into that many chunks whose partial sums are
/// merged in chunk order; the result is independent of the split.
/// Throws std::domain_error("insufficient precision") when the division
/// would consume the whole working precision, and rejects levels whose
/// point count exceeds an internal work budget.
RiemannSum riemann_sum(const std::function<PadicInt(long)>& f, int level,
                       const QPoint& qp, int jobs = 1);

/// Valuation of (numerator/denominator - target), measured without dividing:
/// v(S*b - a*D) - v(D) - v(b) for target a/b.  When the cross-multiplied
/// difference vanishes modulo p^M the value is only a lower bound and
/// `exact` is false.
struct ErrorValuation {
  int valuation = 0;
  bool exact = true;
};

ErrorValuation error_valuation(const RiemannSum& s, const Rational& target);

/// True when the error valuations increase strictly from `from_level` on;
/// inexact entries (differences below working precision) count as infinite.
bool convergence_witness(const std::vector<ErrorValuation>& errors,
                         int from_level = 2);

/// Riemann levels 1..levels for one integrand, with the exact rational
/// reference value and per-level error valuations.
struct ConvergenceReport {
  std::vector<RiemannSum> sums;
  std::vector<ErrorValuation> errors;
  Rational target;
  bool witness = false;
};

/// Integrates [x]_q^n over levels 1..levels and compares against the exact
/// rational value of the n-th q-Bernoulli number at q.
ConvergenceReport beta_padic(int n, const QPoint& qp, int levels);

/// Integrates q^(n x) over levels 1..levels; the reference value is
/// (n+1)/[n+1]_q.
ConvergenceReport geometric_integral_padic(int n, const QPoint& qp,
                                           int levels);

/// Integrates the q-binomial coefficient [x choose n]_q, with samples built
/// by the integer Pascal recurrence (no closed form enters).  The reference
/// value depends on the variant: Corrected uses (-1)^n q^(-C(n,2))/[n+1],
/// AsPrinted uses the same times an extra factor q.
ConvergenceReport qbinom_integral_padic(int n, const QPoint& qp, int levels,
                                        Variant variant);

/// One-sided sup-norm diagnostic.  The grid bound
/// max(|f(0)|, max_{x != y} |f(x)-f(y)|/|x-y|) over x, y < p^level is a
/// lower bound on the true norm, so a pass confirms the inequality
/// |integral| <= p * bound while a fail is merely inconclusive.
struct NormReport {
  int integral_exponent = 0;  // |integral| = p^e (upper bound if sum ~ 0)
  int bound_exponent = 0;     // grid bound = p^E
  bool holds = false;
  std::string verdict;
};

NormReport norm_diagnostic(const std::function<PadicInt(long)>& f, int level,
                           const QPoint& qp);

/// Product form of the p-adic q-gamma value at a positive integer:
/// (-1)^n * prod of [j]_q over 1 <= j < n with j coprime to p.
PadicInt q_gamma(long n, const QPoint& qp);

/// Checks gamma(x+1) == E(x) * gamma(x) with E(x) = -[x]_q when p does not
/// divide x and E(x) = -1 otherwise.
bool gamma_functional_check(long x, const QPoint& qp);

// ---- registry-facing wrappers -------------------------------------------

/// id "padic-measure": the functional sends the constant 1 to exactly 1 at
/// every level 1..levels.
IdentityResult measure_normalization_check(const QPoint& qp, int levels);

/// id "padic-beta": convergence witness for the n-th moment integrand.
IdentityResult beta_convergence_check(int n, const QPoint& qp, int levels);

/// id "eq20": numerical adjudication of the two closed-form candidates for
/// the q-binomial integral; Corrected must converge, AsPrinted must stall.
IdentityResult qbinom_oracle_check(int n, const QPoint& qp, int levels,
                                   Variant variant);

/// id "gamma": functional equation for x = 1..x_max at the given point.
IdentityResult gamma_equation_check(const QPoint& qp, int x_max);

/// id "norm": diagnostic for the integrand [x]_q^power on the given grid.
IdentityResult norm_diagnostic_check(int power, int level, const QPoint& qp);

}  // namespace qbw
