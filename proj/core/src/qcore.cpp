#include "qbw/qcore.hpp"

#include <sstream>
#include <stdexcept>

namespace qbw {

std::string to_string(Variant v) {
  return v == Variant::AsPrinted ? "as-printed" : "corrected";
}

std::string params_str(const ParamMap& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ',';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

IdentityResult make_result(std::string id, std::string variant, ParamMap params,
                           bool equal, std::string note) {
  IdentityResult r;
  r.id = std::move(id);
  r.variant = std::move(variant);
  r.params = std::move(params);
  r.equal = equal;
  r.note = std::move(note);
  return r;
}

IdentityResult check_equal(std::string id, std::string variant, ParamMap params,
                           const RatFunc& lhs, const RatFunc& rhs, std::string note) {
  IdentityResult r = make_result(std::move(id), std::move(variant), std::move(params),
                                 lhs == rhs);
  r.note = std::move(note);
  if (!r.equal) {
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.difference = (lhs - rhs).str();
  }
  return r;
}

BiPoly q_int(int n) {
  if (n < 0) throw std::domain_error("q_int requires n >= 0");
  BiPoly p;
  for (int i = 0; i < n; ++i) p += BiPoly::q_power(i);
  return p;
}

BiPoly q_factorial(int n) {
  if (n < 0) throw std::domain_error("q_factorial requires n >= 0");
  BiPoly p(1L);
  for (int i = 1; i <= n; ++i) p *= q_int(i);
  return p;
}

BiPoly q_binomial(int n, int k) {
  if (k == 0) return BiPoly(1L);  // empty product, any n (including n < 0)
  if (k < 0 || k > n) return BiPoly();
  BiPoly r(1L);
  const BiPoly one(1L);
  // Partial products are Gaussian binomials, so each division is exact.
  for (int i = 1; i <= k; ++i) {
    r = divexact(r * (one - BiPoly::q_power(n - k + i)), one - BiPoly::q_power(i));
  }
  return r;
}

RatFunc q_int_x() {
  return RatFunc(BiPoly(1L) - BiPoly::variable_u(), BiPoly(1L) - BiPoly::variable_q());
}

RatFunc q_int_x_minus(int i) {
  if (i < 0) throw std::domain_error("q_int_x_minus requires i >= 0");
  const BiPoly one(1L);
  return RatFunc(BiPoly::q_power(i) - BiPoly::variable_u(),
                 BiPoly::q_power(i) * (one - BiPoly::variable_q()));
}

RatFunc q_int_x_plus(int i) {
  if (i < 0) throw std::domain_error("q_int_x_plus requires i >= 0");
  const BiPoly one(1L);
  return RatFunc(one - BiPoly::q_power(i) * BiPoly::variable_u(),
                 one - BiPoly::variable_q());
}

RatFunc q_binomial_x(int n) {
  if (n < 0) return RatFunc();
  RatFunc r(1);
  for (int i = 0; i < n; ++i) r *= q_int_x_minus(i);
  return r / RatFunc(q_factorial(n));
}

CompositionStream::CompositionStream(int total, int slots)
    : total_(total), slots_(slots) {
  if (total < 0 || slots <= 0) {
    done_ = true;
    return;
  }
  parts_.assign(static_cast<std::size_t>(slots), 0);
  parts_[0] = total;
}

const std::vector<int>* CompositionStream::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &parts_;
  }
  // Lexicographic successor: move one unit from the rightmost positive
  // non-final slot to its right neighbor, gathering the tail back.
  int i = slots_ - 2;
  while (i >= 0 && parts_[static_cast<std::size_t>(i)] == 0) --i;
  if (i < 0) {
    done_ = true;
    return nullptr;
  }
  int tail = parts_[static_cast<std::size_t>(slots_ - 1)];
  parts_[static_cast<std::size_t>(slots_ - 1)] = 0;
  parts_[static_cast<std::size_t>(i)] -= 1;
  parts_[static_cast<std::size_t>(i + 1)] = tail + 1;
  return &parts_;
}

Int composition_count(int total, int slots) {
  if (total < 0 || slots <= 0) return Int(0);
  return binomial(static_cast<unsigned long>(total + slots - 1),
                  static_cast<unsigned long>(slots - 1));
}

BiPoly q_binomial_via_compositions(int n, int k) {
  if (k < 0 || k > n) return BiPoly();
  BiPoly sum;
  CompositionStream stream(n - k, k + 1);
  while (const std::vector<int>* d = stream.next()) {
    long e = 0;
    for (std::size_t i = 0; i < d->size(); ++i) e += static_cast<long>(i) * (*d)[i];
    sum += BiPoly::q_power(static_cast<int>(e));
  }
  return sum;
}

IdentityResult pascal_check(int n, Variant v) {
  const std::string id = "eq19";
  const ParamMap params{{"n", n}};
  const BiPoly qu = BiPoly::variable_q() * BiPoly::variable_u();
  const RatFunc lhs = q_binomial_x(n).subst_u(qu);  // [x+1 choose n]
  const RatFunc lower = q_binomial_x(n - 1);
  const RatFunc same = q_binomial_x(n);

  // First form: power factor on the [x,n] term.
  const RatFunc pow_a = v == Variant::Corrected
                            ? RatFunc(BiPoly::q_power(n))
                            : RatFunc(BiPoly::variable_u());
  const RatFunc rhs_a = lower + pow_a * same;
  // Second form: power factor on the [x,n-1] term.
  const RatFunc pow_b = v == Variant::Corrected
                            ? RatFunc(BiPoly::variable_q() * BiPoly::variable_u(),
                                      BiPoly::q_power(n))
                            : RatFunc(BiPoly::variable_u(), BiPoly::q_power(n));
  const RatFunc rhs_b = pow_b * lower + same;

  IdentityResult a = check_equal(id, to_string(v), params, lhs, rhs_a, "first form");
  if (!a.equal) return a;
  IdentityResult b = check_equal(id, to_string(v), params, lhs, rhs_b, "second form");
  if (!b.equal) return b;
  return make_result(id, to_string(v), params, true);
}

IdentityResult gauss_product_check(int n, Variant v) {
  const BiPoly one(1L);
  const BiPoly b = BiPoly::variable_u();
  BiPoly product(1L);
  for (int i = 1; i <= n; ++i) product *= one + b * BiPoly::q_power(i - 1);
  BiPoly sum;
  for (int k = 0; k <= n; ++k) {
    const long e = v == Variant::Corrected
                       ? choose2(k)
                       : binomial(static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(k))
                             .get_si();
    sum += q_binomial(n, k) * BiPoly::q_power(static_cast<int>(e)) * b.pow(static_cast<unsigned>(k));
  }
  return check_equal("eq13", to_string(v), ParamMap{{"n", n}}, RatFunc(product),
                     RatFunc(sum));
}

IdentityResult inverse_gauss_check(int n, int order) {
  const BiPoly one(1L);
  BiPoly product(1L);
  for (int i = 1; i <= n; ++i) product *= one - BiPoly::variable_u() * BiPoly::q_power(i - 1);
  const TruncSeries series = TruncSeries::expand(RatFunc(one, product), SeriesVar::U, order);
  for (int k = 0; k <= order; ++k) {
    const RatFunc expected{RatFunc(q_binomial(n + k - 1, k))};
    if (!(series.coefficient(k) == expected)) {
      IdentityResult r = check_equal("eq13", "inverse-series",
                                     ParamMap{{"k", k}, {"n", n}},
                                     series.coefficient(k), expected);
      return r;
    }
  }
  return make_result("eq13", "inverse-series", ParamMap{{"n", n}}, true);
}

IdentityResult alternating_unit_sum_check(int n) {
  BiPoly sum;
  for (int k = 1; k <= n; ++k) {
    const BiPoly term = q_binomial(n, k) * BiPoly::q_power(static_cast<int>(choose2(k)));
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return check_equal("unit-sum", "as-printed", ParamMap{{"n", n}}, RatFunc(sum),
                     RatFunc(1));
}

}  // namespace qbw
