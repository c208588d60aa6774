#pragma once

#include "qbw/identity.hpp"
#include "qbw/series.hpp"
#include "qbw/stirling.hpp"

#include <vector>

namespace qbw {

/// q-deformed Bernoulli numbers beta_n as canonical rational
/// functions of q, from the closed form
///   beta_n = (1-q)^{-n} sum_i C(n,i) (-1)^i (i+1)/[i+1]_q.
class BernoulliTable {
 public:
  explicit BernoulliTable(int max_n);

  int max_n() const { return max_n_; }
  const RatFunc& beta(int n) const;

  /// Independent route: solve the umbral recurrence
  ///   q (q beta + 1)^k - beta_k = [k == 1]
  /// (with (q beta + 1)^k expanded by beta^j -> beta_j) for beta_k.
  static std::vector<RatFunc> via_recurrence(int max_n);

 private:
  int max_n_;
  std::vector<RatFunc> values_;
};

/// Single closed-form value (uncached).
RatFunc beta_closed_form(int n);

/// beta_n(x) in closed form, with u = q^x:
///   (1-q)^{-n} sum_k C(n,k) (-1)^k u^k (k+1)/[k+1]_q.
RatFunc beta_poly(int n);

/// Umbral moment form sum_k C(n,k) [x]^{n-k} u^k beta_k.
RatFunc beta_poly_moment(int n, const BernoulliTable& betas);

/// Finite weighted power sum  sum_{l=0}^{n-1} q^{w*l} [l]_q^m,
/// with [0]^0 = 1; requires m >= 0, w >= 0.
BiPoly power_sum(int n, int m, int w);

/// Value of the q-Volkenborn-style functional on q^{n x}:
/// (n+1)(1-q)/(1-q^{n+1}) = (n+1)/[n+1]_q.
RatFunc integral_qpow(int n);

/// Applies the functional to a u-polynomial f = sum_j c_j(q) u^j
/// (denominator must be free of u): sum_j c_j(q) integral_qpow(j).
RatFunc integral_u_moments(const RatFunc& f);

/// q -> 1 specialization (u, if present, is sent to 1 as well).
Rational classical_limit(const RatFunc& f);

// ----------------------------------------------------------- checks

/// Closed form vs umbral recurrence for all k <= max_n (reports the
/// first mismatch).
IdentityResult beta_recurrence_check(int max_n, const BernoulliTable& betas);

/// Closed polynomial form vs moment form; also pins beta_n(0) =
/// beta_n and q*beta_n(1) - beta_n = [n == 1].
IdentityResult beta_poly_moment_check(int n, const BernoulliTable& betas);

/// Difference formula for integer shifts:
///   corrected: q^n beta_m(n) - beta_m ==
///              m * power_sum(n, m-1, 2) + (q-1) * power_sum(n, m, 1)
///   as printed: beta_m(n) - beta_m == m * power_sum(n, m-1, 2).
IdentityResult sum_formula_check(int m, int n, Variant v, const BernoulliTable& betas);

/// The proposition-style rearrangement (printed form only; falsified):
///   (q-1) power_sum(n,m,1) + power_sum(n,m-1,1) ==
///   (1/m) sum_{l<m} C(m,l) [n]^{m-l} q^{nl} beta_l + (q^{mn}-1) beta_m.
IdentityResult proposition2_check(int m, int n, const BernoulliTable& betas);

/// Multiplication formula, symbolic in x:
///   [m]^{k-1} sum_{i<m} q^i beta_{k,q^m}((x+i)/m) == beta_k(x).
IdentityResult multiplication_check(int m, int k);

/// The x = 0 display under the multiplication formula.
///   corrected: [n] beta_m == sum_{k<=m} C(m,k) beta_{k,q^n} [n]^k
///                            power_sum(n, m-k, k+1)
///   as printed: LHS index and inner exponent use n in place of m.
/// The printed reading needs m <= n to stay well-formed.
IdentityResult multiplication_x0_check(int m, int n, Variant v,
                                       const BernoulliTable& betas);

/// The two sides of a series comparison, truncated at the same order.
struct SeriesPair {
  TruncSeries lhs;
  TruncSeries rhs;
};

/// q-expansions for the generating-function route to beta_m: lhs is
/// the exact expansion of beta_m, rhs the truncated double series
///   -m sum_n q^{2n} [n]^{m-1} + (1-q) sum_n q^n [n]^m.
SeriesPair gf_series_pair(int m, int order, const BernoulliTable& betas);

/// Same for beta_m(x); coefficients are rational functions of u from
///   -m sum_n q^{2n} u [x+n]^{m-1} + (1-q) sum_n q^n [x+n]^m.
SeriesPair gf_poly_series_pair(int m, int order);

/// Generating-function route for beta_m: compares the two sides of
/// gf_series_pair coefficient by coefficient.
IdentityResult gf_coefficient_check(int m, int order, const BernoulliTable& betas);

/// Same for beta_m(x) via gf_poly_series_pair.
IdentityResult gf_poly_coefficient_check(int m, int order);

/// Two expansions of the functional on q^{nt} (Stirling route and
/// binomial route) against the closed value integral_qpow(n).
IdentityResult qpow_expansion_check(int n, const StirlingTable& s1,
                                    const BernoulliTable& betas);

/// C(n,m) == sum_{k=m}^{n} (q-1)^{k-m} [n,k]_q s1(k,m).
IdentityResult theorem5_check(int n, int m, const StirlingTable& s1);

/// beta_n == (1-q)^{-n} sum_l C(n,l) (-1)^l sum_{k<=l} (q-1)^k [l,k]_q
///           sum_{m<=k} s1(k,m) beta_m.
IdentityResult theorem4_check(int n, const StirlingTable& s1,
                              const BernoulliTable& betas);

/// beta_n == (1-q)^{-n} sum_m (sum_{k=m}^{n} (q-1)^{k-m} [n,k]_q
///           s1(k,m)) (-1)^m (m+1)/[m+1]_q.
IdentityResult theorem6_check(int n, const StirlingTable& s1,
                              const BernoulliTable& betas);

/// Composition-sum form of the Gaussian binomial:
///   [n,k]_q == sum over compositions of n-k into k+1 parts of
///   q^{sum i d_i}.
IdentityResult composition_binomial_check(int n, int k);

/// beta_n == sum_m sum_{k=m}^{n} (1-q)^{k-n-m} [n,k]_q s1(k,m) *
///           sign * (m+1)/[m+1]_q, with sign = (-1)^k (corrected) or
///           (-1)^{n-m} (as printed); [n,k]_q realized by the
///           composition sum.
IdentityResult theorem8_check(int n, Variant v, const StirlingTable& s1,
                              const BernoulliTable& betas);

/// Functional applied to the symbolic binomial [x choose n]:
///   corrected: (-1)^n q^{-C(n,2)} / [n+1]_q
///   as printed: (-1)^n q^{n+1-C(n+1,2)} / [n+1]_q  (an extra q).
IdentityResult binom_integral_check(int n, Variant v);

/// Functional applied to the falling factorial, both routes:
///   [n]! * functional([x choose n]) == q^{-C(n,2)} sum_k s1(n,k) beta_k.
IdentityResult stirling_integral_check(int n, const StirlingTable& s1,
                                       const BernoulliTable& betas);

/// sum_k s1(n,k) beta_k == (-1)^n [n]!/[n+1] (corrected) with an
/// extra factor q as printed.
IdentityResult s1_beta_sum_check(int n, Variant v, const StirlingTable& s1,
                                 const BernoulliTable& betas);

/// beta_n == sum_k s2(n,k) (-1)^k [k]!/[k+1] (corrected) with an
/// extra factor q as printed.
IdentityResult theorem7_check(int n, Variant v, const StirlingTable& s2,
                              const BernoulliTable& betas);

/// q -> 1 limits of beta_0..beta_max against the classical Bernoulli
/// numbers from the independent Pascal-recurrence oracle
/// sum_{k<=n} C(n+1,k) B_k = 0.
IdentityResult classical_limit_check(int max_n, const BernoulliTable& betas);

}  // namespace qbw
