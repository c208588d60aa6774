#include "qbw/padic.hpp"

#include <vector>

#include "doctest.h"

using namespace qbw;

namespace {

const QPoint& point56() {
  static const QPoint qp(5, 25, 6);
  return qp;
}

std::vector<int> vals_of(const ConvergenceReport& r) {
  std::vector<int> out;
  for (const auto& e : r.errors) out.push_back(e.valuation);
  return out;
}

bool all_exact(const ConvergenceReport& r) {
  for (const auto& e : r.errors)
    if (!e.exact) return false;
  return true;
}

}  // namespace

TEST_CASE("fixed-precision arithmetic basics") {
  const PadicInt a(5, 3, Int(130));  // 130 = 5 + 125
  CHECK(a.residue() == 5);
  CHECK(a.valuation() == 1);
  CHECK(PadicInt(5, 3, Int(0)).valuation() == 3);  // saturates at precision
  CHECK(PadicInt(5, 2, Int(-1)).residue() == 24);

  const PadicInt two(5, 3, Int(2));
  CHECK(two.inverse() * two == PadicInt(5, 3, Int(1)));
  CHECK_THROWS_WITH_AS(PadicInt(5, 3, Int(10)).inverse(),
                       "p-adic inverse requires a unit (valuation 0)",
                       std::domain_error);

  // comparison across precisions truncates to the smaller one
  CHECK(PadicInt(5, 3, Int(7)) == PadicInt(5, 2, Int(7)));
  CHECK(PadicInt(5, 3, Int(7 + 25)) == PadicInt(5, 2, Int(7)));
  CHECK(PadicInt(5, 3, Int(7 + 25)) != PadicInt(5, 3, Int(7)));

  CHECK((PadicInt(5, 4, Int(3)).pow(4)).residue() == 81);
  CHECK(PadicInt(5, 4, Int(3)).pow(-1) * PadicInt(5, 4, Int(3)) ==
        PadicInt(5, 4, Int(1)));
}

TEST_CASE("domain point validation") {
  CHECK_THROWS_WITH_AS(QPoint(4, 10, 5), "p must be an odd prime",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(QPoint(2, 10, 3), "p must be an odd prime",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(
      QPoint(5, 25, 7),
      "invalid q: the integral requires |q-1|_p < p^(-1/(p-1)), "
      "i.e. v_p(q-1) >= 1",
      std::domain_error);
  CHECK_THROWS_AS(QPoint(5, 0, 6), std::domain_error);
  CHECK(QPoint(5, 25, 6).q().residue() == 6);
  CHECK(QPoint(7, 25, 8).q_integer() == 8);
}

TEST_CASE("one Riemann level: normalization, loss, errors") {
  const QPoint& qp = point56();
  auto one = [&](long) { return PadicInt(5, 25, Int(1)); };
  for (int level = 1; level <= 5; ++level) {
    const RiemannSum s = riemann_sum(one, level, qp);
    CHECK(s.loss == level);  // denominator valuation equals the level
    REQUIRE(s.value.has_value());
    CHECK(*s.value == PadicInt(5, 25 - level, Int(1)));
  }
  CHECK(measure_normalization_check(qp, 5).equal);

  CHECK_THROWS_WITH_AS(riemann_sum(one, 3, QPoint(5, 3, 6)),
                       "insufficient precision", std::domain_error);
  CHECK_THROWS_WITH_AS(riemann_sum(one, 12, qp), "level budget exceeded",
                       std::domain_error);
  CHECK_THROWS_AS(riemann_sum(one, 0, qp), std::domain_error);
}

TEST_CASE("chunked evaluation is merge-order independent") {
  const QPoint& qp = point56();
  // f(x) = [x]_q as residues
  std::vector<Int> xs;
  Int s = 0, qx = 1;
  for (long x = 0; x < 125; ++x) {
    xs.push_back(s);
    s += qx;
    qx *= 6;
  }
  auto f = [&](long x) { return PadicInt(5, 25, xs[static_cast<size_t>(x)]); };
  const RiemannSum r1 = riemann_sum(f, 3, qp, 1);
  const RiemannSum r3 = riemann_sum(f, 3, qp, 3);
  const RiemannSum r7 = riemann_sum(f, 3, qp, 7);
  CHECK(r1.numerator == r3.numerator);
  CHECK(r1.numerator == r7.numerator);
  CHECK(r1.denominator == r3.denominator);
  CHECK(r1.denominator == r7.denominator);
}

TEST_CASE("linearity of a fixed level") {
  const QPoint& qp = point56();
  std::vector<Int> xs;
  Int s = 0, qx = 1;
  for (long x = 0; x < 125; ++x) {
    xs.push_back(s);
    s += qx;
    qx *= 6;
  }
  auto f = [&](long x) { return PadicInt(5, 25, xs[static_cast<size_t>(x)]); };
  auto g = [&](long x) {
    return PadicInt(5, 25, xs[static_cast<size_t>(x)] * xs[static_cast<size_t>(x)]);
  };
  const PadicInt a(5, 25, Int(3)), b(5, 25, Int(2));
  auto combo = [&](long x) { return a * f(x) + b * g(x); };
  const RiemannSum rf = riemann_sum(f, 3, qp);
  const RiemannSum rg = riemann_sum(g, 3, qp);
  const RiemannSum rc = riemann_sum(combo, 3, qp);
  CHECK(rc.numerator == a * rf.numerator + b * rg.numerator);
  CHECK(rc.denominator == rf.denominator);
}

TEST_CASE("moment integrands converge to the exact rational values") {
  const QPoint& qp = point56();
  for (int n = 0; n <= 6; ++n) {
    const ConvergenceReport rep = beta_padic(n, qp, 5);
    CAPTURE(n);
    CHECK(rep.witness);
    CHECK(beta_convergence_check(n, qp, 5).equal);
  }

  // frozen valuation profiles
  const ConvergenceReport n1 = beta_padic(1, qp, 5);
  CHECK(vals_of(n1) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(all_exact(n1));
  const ConvergenceReport n6 = beta_padic(6, qp, 5);
  CHECK(vals_of(n6) == std::vector<int>{2, 3, 4, 5, 6});

  // n = 0 integrates exactly: differences vanish at working precision
  const ConvergenceReport n0 = beta_padic(0, qp, 5);
  for (const auto& e : n0.errors) CHECK_FALSE(e.exact);
  CHECK(vals_of(n0) == std::vector<int>{24, 23, 22, 21, 20});

  // the n = 4 target has negative valuation: no quotient in the integers,
  // yet cross-multiplied convergence still certifies the limit
  const ConvergenceReport n4 = beta_padic(4, qp, 5);
  CHECK(n4.witness);
  for (const auto& s : n4.sums) CHECK_FALSE(s.value.has_value());
}

TEST_CASE("geometric integrand") {
  const ConvergenceReport rep = geometric_integral_padic(1, point56(), 5);
  CHECK(rep.witness);
  CHECK(vals_of(rep) == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(rep.target == Rational(2, 7));
}

TEST_CASE("independent adjudication of the binomial-integral constant") {
  const QPoint& qp = point56();
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(qbinom_oracle_check(n, qp, 5, Variant::Corrected).equal);
    CHECK_FALSE(qbinom_oracle_check(n, qp, 5, Variant::AsPrinted).equal);
  }
  const ConvergenceReport c1 = qbinom_integral_padic(1, qp, 5, Variant::Corrected);
  CHECK(vals_of(c1) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(c1.target == Rational(-1, 7));
  const ConvergenceReport p2 = qbinom_integral_padic(2, qp, 5, Variant::AsPrinted);
  CHECK(vals_of(p2) == std::vector<int>{2, 1, 1, 1, 1});
  const ConvergenceReport p4 = qbinom_integral_padic(4, qp, 5, Variant::AsPrinted);
  CHECK(vals_of(p4) == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("norm diagnostic on the polynomial family") {
  const QPoint& qp = point56();
  for (int level = 1; level <= 4; ++level) {
    for (int power : {0, 1, 3}) {
      CAPTURE(level);
      CAPTURE(power);
      const IdentityResult r = norm_diagnostic_check(power, level, qp);
      CHECK(r.equal);
      CHECK(r.note == "holds");
    }
  }
}

TEST_CASE("gamma products and the functional equation") {
  const QPoint& qp = point56();
  CHECK(q_gamma(1, qp) == PadicInt(5, 25, Int(-1)));
  CHECK(q_gamma(2, qp) == PadicInt(5, 25, Int(1)));  // -1 * [1] then sign
  // step at a multiple of p only flips the sign
  CHECK(q_gamma(6, qp) == -q_gamma(5, qp));
  for (long x = 1; x <= 30; ++x) {
    CAPTURE(x);
    CHECK(gamma_functional_check(x, qp));
  }
  const QPoint qp78(7, 25, 8);
  for (long x = 1; x <= 30; ++x) {
    CAPTURE(x);
    CHECK(gamma_functional_check(x, qp78));
  }
  CHECK(gamma_equation_check(qp, 30).equal);
  CHECK(gamma_equation_check(qp78, 30).equal);
}
