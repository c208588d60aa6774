#pragma once

#include "qbw/identity.hpp"
#include "qbw/qcore.hpp"

#include <vector>

namespace qbw {

/// Triangles of q-deformed Stirling numbers, stored for 0 <= k <= n up
/// to a fixed maximum row.
///
/// First kind: s1(0,0) = 1 and
///   s1(n,k) = s1(n-1,k-1) - [n-1]_q s1(n-1,k).
/// Second kind: defined by the inverse basis change; computed by
/// inverting the unitriangular-up-to-units matrix M1[n,m] =
/// q^{-C(n,2)} s1(n,m), with s2(n,k) = q^{-C(k,2)} M2[n,k].
class StirlingTable {
 public:
  enum class Kind { First, Second };

  static StirlingTable first(int max_n);
  static StirlingTable second(int max_n);

  Kind kind() const { return kind_; }
  int max_n() const { return max_n_; }
  /// Entry at (n, k); zero outside the triangle.
  const RatFunc& at(int n, int k) const;

 private:
  StirlingTable(Kind kind, int max_n);

  Kind kind_;
  int max_n_;
  std::vector<std::vector<RatFunc>> rows_;
};

/// q-falling factorial [x]_{n,q} = [x]_q [x-1]_q ... [x-n+1]_q as a
/// symbolic function of u = q^x; equals q_binomial_x(n) * [n]_q!.
RatFunc falling_factor(int n);

/// Basis change from falling factorials to powers:
///   [x]_{n,q} == q^{-C(n,2)} sum_l s1(n,l) [x]_q^l.
IdentityResult power_basis_check(int n, const StirlingTable& s1);

/// Inverse basis change:
///   [x]_q^n == sum_k q^{C(k,2)} s2(n,k) [x]_{k,q}.
IdentityResult falling_basis_check(int n, const StirlingTable& s2);

/// The two triangles seen as matrices M1[n,m] = q^{-C(n,2)} s1(n,m)
/// and M2[n,k] = q^{C(k,2)} s2(n,k) must be mutually inverse up to row
/// max_n.
IdentityResult matrix_inverse_check(int max_n, const StirlingTable& s1,
                                    const StirlingTable& s2);

/// sum_{k=1..n} q^k/[k]_q, the q-harmonic number.
RatFunc q_harmonic(int n);
/// The misprinted variant sum_{k=1..n} q^n/[k]_q.
RatFunc q_harmonic_printed(int n);
/// sum_{k=1..n} 1/[k]_q.
RatFunc plain_harmonic(int n);
/// sum_{k=1..n} (-1)^{k+1} q^{C(k+1,2)} [n,k]_q / [k]_q.
RatFunc alt_binomial_harmonic(int n);

/// Closed forms read off the first-kind recurrence:
///   s1(n,1) = (-1)^{n-1} [n-1]_q!           (n >= 1)
///   s1(n,2) = (-1)^n [n-1]_q! sum_{k<n} 1/[k]_q   (n >= 2).
IdentityResult s1_closed_form_check(int n, const StirlingTable& s1);

/// Telescoping step: alt_binomial_harmonic(n) - alt_binomial_harmonic(n-1)
/// == q^n/[n]_q for n >= 1.
IdentityResult harmonic_telescope_check(int n);

/// Double-sum form: sum_{m=1..n} (-1)^{m+1} q^{C(m+1,2)} [n+1,m+1]_q
/// * sum_{k<=m} 1/[k]_q == alt_binomial_harmonic(n).
IdentityResult harmonic_double_sum_check(int n);

/// The harmonic identity extracted from the digamma chain:
/// alt_binomial_harmonic(n) against q_harmonic(n) (corrected) or the
/// misprinted q_harmonic_printed(n).
IdentityResult theorem3_check(int n, Variant v);

}  // namespace qbw
