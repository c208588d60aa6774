#pragma once

#include "qbw/identity.hpp"
#include "qbw/ratfunc.hpp"
#include "qbw/series.hpp"

#include <optional>
#include <vector>

namespace qbw {

/// [n]_q = 1 + q + ... + q^{n-1} for n >= 0.
BiPoly q_int(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
BiPoly q_factorial(int n);

/// Gaussian binomial coefficient, computed by the telescoping product
/// of (1-q^{n-k+i})/(1-q^i).  One when k == 0 (empty product, any n);
/// zero when k < 0 or k > n.
BiPoly q_binomial(int n, int k);

/// [x]_q = (1-u)/(1-q) with u standing for q^x.
RatFunc q_int_x();
/// [x-i]_q = (q^i-u)/(q^i(1-q)), i >= 0.
RatFunc q_int_x_minus(int i);
/// [x+i]_q = (1-q^i u)/(1-q), i >= 0.
RatFunc q_int_x_plus(int i);

/// Symbolic [x choose n]_q: product of [x-i]_q over i < n divided by
/// [n]_q!.  Substituting u := q^m for an integer m >= n reproduces
/// q_binomial(m, n).
RatFunc q_binomial_x(int n);

/// Streams all ways to write `total` as an ordered sum of `slots`
/// non-negative parts, in lexicographic order.
class CompositionStream {
 public:
  CompositionStream(int total, int slots);
  /// Next composition, or nullptr when exhausted.  The pointee is
  /// invalidated by the following call.
  const std::vector<int>* next();

 private:
  std::vector<int> parts_;
  int total_;
  int slots_;
  bool started_ = false;
  bool done_ = false;
};

/// C(total + slots - 1, slots - 1).
Int composition_count(int total, int slots);

/// Sum of q^{sum i*d_i} over compositions d of n-k into k+1 parts;
/// equals q_binomial(n, k).
BiPoly q_binomial_via_compositions(int n, int k);

/// Row-n Pascal rules for Gaussian binomials, checked as rational
/// function identities in u = q^x.  The corrected pair is
///   [x+1,n] = [x,n-1] + q^n [x,n]
///   [x+1,n] = q^{x+1-n} [x,n-1] + [x,n];
/// the as-printed pair replaces the power factors by q^x and q^{x-n}.
IdentityResult pascal_check(int n, Variant v);

/// Finite product formula: prod_{i=1}^{n} (1 + b q^{i-1}) against
/// sum_k [n,k]_q q^{e(k)} b^k with e(k) = C(k,2) (corrected) or
/// e(k) = binomial(n,k) (as printed); b is realized as u.
IdentityResult gauss_product_check(int n, Variant v);

/// Series side: prod_{i=1}^{n} (1 - b q^{i-1})^{-1} expanded to the
/// given order in b must have coefficient q_binomial(n+k-1, k) at b^k.
IdentityResult inverse_gauss_check(int n, int order);

/// sum_{k=1}^{n} (-1)^{k+1} q^{C(k,2)} [n,k]_q == 1 for n >= 1.
IdentityResult alternating_unit_sum_check(int n);

}  // namespace qbw
