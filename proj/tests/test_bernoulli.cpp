#include "qbw/bernoulli.hpp"

#include "doctest.h"
#include "qbw/qcore.hpp"
#include "qbw/stirling.hpp"

using namespace qbw;

namespace {

const BernoulliTable& betas12() {
  static const BernoulliTable t(12);
  return t;
}

const StirlingTable& s1_10() {
  static const StirlingTable t = StirlingTable::first(10);
  return t;
}

}  // namespace

TEST_CASE("first values of the deformed Bernoulli sequence") {
  const BernoulliTable& b = betas12();
  CHECK(b.beta(0).str() == "1");
  CHECK(b.beta(1).str() == "-1/(1+q)");
  CHECK(b.beta(2).str() == "q/(1+2*q+2*q^2+q^3)");
  CHECK(beta_closed_form(1) == b.beta(1));
  CHECK(beta_recurrence_check(12, b).equal);
}

TEST_CASE("classical limits at q = 1") {
  const BernoulliTable& b = betas12();
  CHECK(classical_limit(b.beta(0)) == Rational(1));
  CHECK(classical_limit(b.beta(1)) == Rational(-1, 2));
  CHECK(classical_limit(b.beta(2)) == Rational(1, 6));
  CHECK(classical_limit(b.beta(3)) == Rational(0));
  CHECK(classical_limit(b.beta(4)) == Rational(-1, 30));
  CHECK(classical_limit_check(12, b).equal);
}

TEST_CASE("polynomial forms agree and pin boundary values") {
  const BernoulliTable& b = betas12();
  CHECK(beta_poly(0).str() == "1");
  CHECK(beta_poly(1).str() == "(1-2*u+q)/(1-q^2)");
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(beta_poly_moment_check(n, b).equal);
  }
  // value at x = 0, i.e. u = 1
  for (int n = 0; n <= 6; ++n) {
    CHECK(beta_poly(n).subst_u(BiPoly(1)) == b.beta(n));
  }
}

TEST_CASE("weighted power sums") {
  CHECK(power_sum(1, 0, 0).str() == "1");  // [0]^0 counts as 1
  CHECK(power_sum(4, 0, 0).str() == "4");
  CHECK(power_sum(3, 1, 1).str() == "q+q^2+q^3");
  CHECK_THROWS_AS(power_sum(3, -1, 0), std::domain_error);
  CHECK_THROWS_AS(power_sum(3, 0, -1), std::domain_error);
}

TEST_CASE("the functional on powers of u") {
  const BernoulliTable& b = betas12();
  CHECK(integral_qpow(0).str() == "1");
  CHECK(integral_qpow(1).str() == "2/(1+q)");
  // moment representation: functional([x]^n) is the n-th number
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(integral_u_moments(q_int_x().pow(n)) == b.beta(n));
  }
  CHECK_THROWS_WITH_AS(
      integral_u_moments(RatFunc(BiPoly(1), BiPoly(1) - BiPoly::variable_u())),
      "functional needs a u-polynomial argument", std::domain_error);
}

TEST_CASE("difference formula for integer shifts") {
  const BernoulliTable& b = betas12();
  for (int m = 0; m <= 6; ++m) {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(sum_formula_check(m, n, Variant::Corrected, b).equal);
    }
  }
  const IdentityResult printed = sum_formula_check(1, 1, Variant::AsPrinted, b);
  CHECK_FALSE(printed.equal);
  CHECK(printed.lhs == "2/(1+q)");
  CHECK(printed.rhs == "1");
}

TEST_CASE("proposition-style rearrangement is falsified") {
  const BernoulliTable& b = betas12();
  const IdentityResult r = proposition2_check(1, 1, b);
  CHECK_FALSE(r.equal);
  CHECK(r.lhs == "1");
  CHECK(r.rhs == "2/(1+q)");
}

TEST_CASE("multiplication formula in the symbolic variable") {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= 6; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(multiplication_check(m, k).equal);
    }
  }
}

TEST_CASE("multiplication formula at x = 0") {
  const BernoulliTable& b = betas12();
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(multiplication_x0_check(m, n, Variant::Corrected, b).equal);
    }
  }
  CHECK_FALSE(multiplication_x0_check(1, 2, Variant::AsPrinted, b).equal);
}

TEST_CASE("series route reproduces the numbers") {
  const BernoulliTable& b = betas12();
  for (int m = 0; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(gf_coefficient_check(m, 30, b).equal);
  }
}

TEST_CASE("series route reproduces the polynomials") {
  for (int m = 0; m <= 5; ++m) {
    CAPTURE(m);
    CHECK(gf_poly_coefficient_check(m, 20).equal);
  }
}

TEST_CASE("both expansions of the functional on q^(n x)") {
  const BernoulliTable& b = betas12();
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(qpow_expansion_check(n, s1_10(), b).equal);
  }
}

TEST_CASE("binomial-coefficient expansion of plain binomials") {
  for (int n = 0; n <= 10; ++n) {
    for (int m = 0; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(theorem5_check(n, m, s1_10()).equal);
    }
  }
}

TEST_CASE("nested first-kind expansions reproduce the numbers") {
  const BernoulliTable& b = betas12();
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(theorem4_check(n, s1_10(), b).equal);
    CHECK(theorem6_check(n, s1_10(), b).equal);
  }
}

TEST_CASE("composition-sum expansion with sign adjudication") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(composition_binomial_check(n, k).equal);
    }
  }
  const BernoulliTable& b = betas12();
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(theorem8_check(n, Variant::Corrected, s1_10(), b).equal);
  }
  const IdentityResult printed = theorem8_check(1, Variant::AsPrinted, s1_10(), b);
  CHECK_FALSE(printed.equal);
  CHECK(printed.lhs == "1/(1+q)");
  CHECK(printed.rhs == "-1/(1+q)");
}

TEST_CASE("functional on the symbolic binomial row") {
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(binom_integral_check(n, Variant::Corrected).equal);
  }
  const IdentityResult printed0 = binom_integral_check(0, Variant::AsPrinted);
  CHECK_FALSE(printed0.equal);
  CHECK(printed0.lhs == "1");
  CHECK(printed0.rhs == "q");
  CHECK_FALSE(binom_integral_check(1, Variant::AsPrinted).equal);
  // n = 1 is the moment of [x]: -1/(1+q)
  CHECK(integral_u_moments(q_binomial_x(1)).str() == "-1/(1+q)");
}

TEST_CASE("functional on falling factorials, both routes") {
  const BernoulliTable& b = betas12();
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(stirling_integral_check(n, s1_10(), b).equal);
  }
}

TEST_CASE("first-kind weighted sum of the numbers") {
  const BernoulliTable& b = betas12();
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(s1_beta_sum_check(n, Variant::Corrected, s1_10(), b).equal);
  }
  const IdentityResult printed = s1_beta_sum_check(0, Variant::AsPrinted, s1_10(), b);
  CHECK_FALSE(printed.equal);
  CHECK(printed.lhs == "1");
  CHECK(printed.rhs == "q");
  CHECK_FALSE(s1_beta_sum_check(1, Variant::AsPrinted, s1_10(), b).equal);
}

TEST_CASE("second-kind expansion of the numbers") {
  const BernoulliTable& b = betas12();
  const StirlingTable s2 = StirlingTable::second(8);
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(theorem7_check(n, Variant::Corrected, s2, b).equal);
  }
  CHECK_FALSE(theorem7_check(0, Variant::AsPrinted, s2, b).equal);
  CHECK_FALSE(theorem7_check(1, Variant::AsPrinted, s2, b).equal);
}
