#include "qbw/stirling.hpp"

#include <vector>

#include "doctest.h"
#include "qbw/qcore.hpp"

using namespace qbw;

TEST_CASE("first-kind triangle values") {
  const StirlingTable t = StirlingTable::first(8);
  CHECK(t.at(0, 0).str() == "1");
  CHECK(t.at(2, 1).str() == "-1");
  CHECK(t.at(2, 2).str() == "1");
  CHECK(t.at(3, 2).str() == "-2-q");
  CHECK(t.at(4, 1).str() == "-1-2*q-2*q^2-q^3");

  for (int n = 1; n <= 8; ++n) {
    CHECK(t.at(n, 0).is_zero());
    CHECK(t.at(n, n).str() == "1");
    CHECK(t.at(n, n + 1).is_zero());
    // column 1 closed form: alternating-signed factorial
    BiPoly expect = q_factorial(n - 1);
    if (n % 2 == 0) expect = BiPoly(0) - expect;
    CHECK(t.at(n, 1) == RatFunc(expect));
  }
}

TEST_CASE("second-kind triangle from the inverse transform") {
  const StirlingTable t = StirlingTable::second(8);
  CHECK(t.at(0, 0).str() == "1");
  CHECK(t.at(1, 0).str() == "0");
  CHECK(t.at(1, 1).str() == "1");
  CHECK(t.at(2, 1).str() == "1");
  CHECK(t.at(2, 2).str() == "1");
  for (int n = 1; n <= 8; ++n) {
    CHECK(t.at(n, n).str() == "1");
    CHECK(t.at(n, 0).str() == "0");
  }
}

TEST_CASE("q -> 1 limits match the classical triangles") {
  // classical recurrences computed independently on plain integers
  const int N = 8;
  std::vector<std::vector<Rational>> s1(N + 1), s2(N + 1);
  for (int n = 0; n <= N; ++n) {
    s1[n].assign(N + 1, Rational(0));
    s2[n].assign(N + 1, Rational(0));
  }
  s1[0][0] = 1;
  s2[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= n; ++k) {
      s1[n][k] = s1[n - 1][k - 1] - Rational(n - 1) * s1[n - 1][k];
      s2[n][k] = s2[n - 1][k - 1] + Rational(k) * s2[n - 1][k];
    }
  }

  const StirlingTable first = StirlingTable::first(N);
  const StirlingTable second = StirlingTable::second(N);
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(first.at(n, k).eval(Rational(1), Rational(0)) == s1[n][k]);
      CHECK(second.at(n, k).eval(Rational(1), Rational(0)) == s2[n][k]);
    }
  }
}

TEST_CASE("falling factors") {
  CHECK(falling_factor(0).str() == "1");
  CHECK(falling_factor(1).str() == "(1-u)/(1-q)");
  CHECK(falling_factor(2).subst_u(BiPoly::q_power(2)) == RatFunc(q_int(2)));
  CHECK(falling_factor(2).subst_u(BiPoly::q_power(2)).str() == "1+q");
  for (int n = 0; n <= 6; ++n) {
    CHECK(falling_factor(n) == q_binomial_x(n) * RatFunc(q_factorial(n)));
  }
}

TEST_CASE("basis changes between powers and falling factors") {
  const StirlingTable s1 = StirlingTable::first(10);
  const StirlingTable s2 = StirlingTable::second(10);
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(power_basis_check(n, s1).equal);
    CHECK(falling_basis_check(n, s2).equal);
  }
  CHECK(matrix_inverse_check(10, s1, s2).equal);
}

TEST_CASE("weighted harmonic sums") {
  CHECK(q_harmonic(1).str() == "q");
  CHECK(alt_binomial_harmonic(1).str() == "q");
  CHECK(q_harmonic(2).str() == "(q+2*q^2)/(1+q)");
  CHECK(alt_binomial_harmonic(2).str() == "(q+2*q^2)/(1+q)");
  CHECK(q_harmonic_printed(2).str() == "(2*q^2+q^3)/(1+q)");
  CHECK_THROWS_AS(q_harmonic(0), std::domain_error);

  for (int n = 1; n <= 12; ++n) {
    const IdentityResult r = theorem3_check(n, Variant::Corrected);
    CAPTURE(n);
    CHECK(r.equal);
  }
  const IdentityResult printed = theorem3_check(2, Variant::AsPrinted);
  CHECK_FALSE(printed.equal);
  CHECK(printed.lhs == "(q+2*q^2)/(1+q)");
  CHECK(printed.rhs == "(2*q^2+q^3)/(1+q)");
}

TEST_CASE("first-kind closed forms for the low columns") {
  const StirlingTable s1 = StirlingTable::first(8);
  for (int n = 2; n <= 8; ++n) {
    CHECK(s1_closed_form_check(n, s1).equal);
  }
}

TEST_CASE("harmonic sum rewrites used by the finite-sum theorem") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(harmonic_telescope_check(n).equal);
    CHECK(harmonic_double_sum_check(n).equal);
  }
}
