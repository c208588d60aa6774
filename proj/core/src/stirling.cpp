#include "qbw/stirling.hpp"

#include <stdexcept>

namespace qbw {

namespace {

const RatFunc kZero{};

/// q^{C(n,2)} as a rational function (exponent is never negative).
RatFunc q_choose2(int n) { return RatFunc(BiPoly::q_power(static_cast<int>(choose2(n)))); }

}  // namespace

StirlingTable::StirlingTable(Kind kind, int max_n) : kind_(kind), max_n_(max_n) {
  if (max_n < 0) throw std::domain_error("negative table size");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, RatFunc());
  }
}

StirlingTable StirlingTable::first(int max_n) {
  StirlingTable t(Kind::First, max_n);
  t.rows_[0][0] = RatFunc(1);
  for (int n = 1; n <= max_n; ++n) {
    const RatFunc bracket{RatFunc(q_int(n - 1))};
    for (int k = 0; k <= n; ++k) {
      RatFunc v;
      if (k >= 1) v = t.at(n - 1, k - 1);
      v -= bracket * t.at(n - 1, k);
      t.rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = v;
    }
  }
  return t;
}

StirlingTable StirlingTable::second(int max_n) {
  const StirlingTable s1 = first(max_n);
  StirlingTable t(Kind::Second, max_n);
  // Invert the lower-triangular M1[n,m] = q^{-C(n,2)} s1(n,m) row by
  // row: M2[n,k] solves sum_m M2[n,m] M1[m,k] = delta_{n,k}.
  std::vector<std::vector<RatFunc>> m1(static_cast<std::size_t>(max_n) + 1);
  std::vector<std::vector<RatFunc>> m2(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    m1[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, RatFunc());
    m2[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, RatFunc());
    for (int m = 0; m <= n; ++m) {
      m1[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
          s1.at(n, m) / q_choose2(n);
    }
  }
  for (int n = 0; n <= max_n; ++n) {
    for (int k = n; k >= 0; --k) {
      if (k == n) {
        m2[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            m1[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)].inverse();
        continue;
      }
      // 0 = sum_{m=k}^{n} M2[n,m] M1[m,k]; solve for M2[n,k].
      RatFunc acc;
      for (int m = k + 1; m <= n; ++m) {
        acc += m2[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] *
               m1[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
      }
      m2[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          -acc / m1[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    for (int k = 0; k <= n; ++k) {
      t.rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          m2[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] / q_choose2(k);
    }
  }
  return t;
}

const RatFunc& StirlingTable::at(int n, int k) const {
  if (n < 0 || n > max_n_ || k < 0 || k > n) return kZero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

RatFunc falling_factor(int n) {
  RatFunc r(1);
  for (int i = 0; i < n; ++i) r *= q_int_x_minus(i);
  return r;
}

IdentityResult power_basis_check(int n, const StirlingTable& s1) {
  const RatFunc x = q_int_x();
  RatFunc rhs;
  for (int l = 0; l <= n; ++l) rhs += s1.at(n, l) * x.pow(l);
  rhs = rhs / q_choose2(n);
  return check_equal("eq14", "as-printed", ParamMap{{"n", n}}, falling_factor(n), rhs);
}

IdentityResult falling_basis_check(int n, const StirlingTable& s2) {
  const RatFunc x = q_int_x();
  RatFunc rhs;
  for (int k = 0; k <= n; ++k) rhs += q_choose2(k) * s2.at(n, k) * falling_factor(k);
  return check_equal("eq15", "as-printed", ParamMap{{"n", n}}, x.pow(n), rhs);
}

IdentityResult matrix_inverse_check(int max_n, const StirlingTable& s1,
                                    const StirlingTable& s2) {
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= max_n; ++k) {
      RatFunc prod12;
      RatFunc prod21;
      for (int m = 0; m <= max_n; ++m) {
        prod12 += (s1.at(n, m) / q_choose2(n)) * (q_choose2(k) * s2.at(m, k));
        prod21 += (q_choose2(m) * s2.at(n, m)) * (s1.at(m, k) / q_choose2(m));
      }
      const RatFunc expected(n == k ? 1 : 0);
      if (!(prod12 == expected) || !(prod21 == expected)) {
        IdentityResult r = check_equal("eq14", "matrix-inverse",
                                       ParamMap{{"k", k}, {"n", n}},
                                       prod12 == expected ? prod21 : prod12, expected,
                                       "triangular inverse entry");
        return r;
      }
    }
  }
  return make_result("eq14", "matrix-inverse", ParamMap{{"max_n", max_n}}, true);
}

RatFunc q_harmonic(int n) {
  if (n < 1) throw std::domain_error("harmonic sums need n >= 1");
  RatFunc s;
  for (int k = 1; k <= n; ++k) s += RatFunc(BiPoly::q_power(k), q_int(k));
  return s;
}

RatFunc q_harmonic_printed(int n) {
  if (n < 1) throw std::domain_error("harmonic sums need n >= 1");
  RatFunc s;
  for (int k = 1; k <= n; ++k) {
    s += RatFunc(BiPoly::q_power(n), q_int(k));
  }
  return s;
}

RatFunc plain_harmonic(int n) {
  RatFunc s;
  for (int k = 1; k <= n; ++k) s += RatFunc(BiPoly(1L), q_int(k));
  return s;
}

RatFunc alt_binomial_harmonic(int n) {
  if (n < 1) throw std::domain_error("harmonic sums need n >= 1");
  RatFunc s;
  for (int k = 1; k <= n; ++k) {
    RatFunc term(q_binomial(n, k) * BiPoly::q_power(static_cast<int>(choose2(k + 1))),
                 q_int(k));
    if (k % 2 == 0) term = -term;
    s += term;
  }
  return s;
}

IdentityResult s1_closed_form_check(int n, const StirlingTable& s1) {
  const ParamMap params{{"n", n}};
  const int sign1 = (n - 1) % 2 == 0 ? 1 : -1;
  const RatFunc expect1 = RatFunc(q_factorial(n - 1)) * RatFunc(sign1);
  IdentityResult a =
      check_equal("s1-closed", "as-printed", params, s1.at(n, 1), expect1, "k=1");
  if (!a.equal) return a;
  if (n >= 2) {
    const int sign2 = n % 2 == 0 ? 1 : -1;
    const RatFunc expect2 =
        RatFunc(q_factorial(n - 1)) * RatFunc(sign2) * plain_harmonic(n - 1);
    IdentityResult b =
        check_equal("s1-closed", "as-printed", params, s1.at(n, 2), expect2, "k=2");
    if (!b.equal) return b;
  }
  return make_result("s1-closed", "as-printed", params, true);
}

IdentityResult harmonic_telescope_check(int n) {
  const RatFunc prev = n >= 2 ? alt_binomial_harmonic(n - 1) : RatFunc(0);
  const RatFunc lhs = alt_binomial_harmonic(n) - prev;
  const RatFunc rhs(BiPoly::q_power(n), q_int(n));
  return check_equal("thm3", "telescope", ParamMap{{"n", n}}, lhs, rhs);
}

IdentityResult harmonic_double_sum_check(int n) {
  RatFunc lhs;
  for (int m = 1; m <= n; ++m) {
    RatFunc term = RatFunc(q_binomial(n + 1, m + 1) *
                           BiPoly::q_power(static_cast<int>(choose2(m + 1)))) *
                   plain_harmonic(m);
    if (m % 2 == 0) term = -term;
    lhs += term;
  }
  return check_equal("thm3", "double-sum", ParamMap{{"n", n}}, lhs,
                     alt_binomial_harmonic(n));
}

IdentityResult theorem3_check(int n, Variant v) {
  const RatFunc lhs = alt_binomial_harmonic(n);
  const RatFunc rhs = v == Variant::Corrected ? q_harmonic(n) : q_harmonic_printed(n);
  return check_equal("thm3", to_string(v), ParamMap{{"n", n}}, lhs, rhs);
}

}  // namespace qbw
