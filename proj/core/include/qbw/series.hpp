#pragma once

#include "qbw/ratfunc.hpp"

#include <string>
#include <vector>

namespace qbw {

/// Expansion variable of a truncated series.  Q and U are the two
/// polynomial variables; Aux is a formal variable that never appears in
/// coefficients (used for ordinary generating functions).
enum class SeriesVar { Q, U, Aux };

std::string to_string(SeriesVar v);

/// Power series truncated at a fixed order K: coefficients for
/// exponents 0..K.  Coefficients are rational functions free of the
/// expansion variable (enforced for Q and U).
class TruncSeries {
 public:
  TruncSeries(SeriesVar var, int order);

  static TruncSeries constant(const RatFunc& c, SeriesVar var, int order);
  /// The series "var" itself (zero when order < 1).
  static TruncSeries variable(SeriesVar var, int order);

  /// Coefficients of f expanded at the origin of `var` (Q or U).
  /// Throws PoleError("pole at origin", ...) when the denominator
  /// vanishes at var = 0, std::domain_error for var == Aux.
  static TruncSeries expand(const RatFunc& f, SeriesVar var, int order);

  SeriesVar var() const { return var_; }
  int order() const { return order_; }

  const RatFunc& coefficient(int i) const;
  /// Sets coefficient i; rejects coefficients containing the expansion
  /// variable.
  void set_coefficient(int i, RatFunc c);

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries operator-() const;

  TruncSeries scaled(const RatFunc& c) const;
  /// Multiply by var^k (shift coefficients up, truncating).
  TruncSeries shifted(int k) const;
  TruncSeries pow(unsigned e) const;
  /// Multiplicative inverse; throws std::domain_error when the constant
  /// term is zero.
  TruncSeries inverse() const;

  std::string str() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  void check_coefficient(const RatFunc& c) const;

  SeriesVar var_;
  int order_;
  std::vector<RatFunc> c_;
};

}  // namespace qbw
