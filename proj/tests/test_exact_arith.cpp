#include "doctest.h"

#include "qbw/bipoly.hpp"
#include "qbw/ratfunc.hpp"
#include "qbw/series.hpp"

#include <random>
#include <vector>

using namespace qbw;

namespace {

const BiPoly Q = BiPoly::variable_q();
const BiPoly U = BiPoly::variable_u();
const BiPoly ONE(1L);

// Uniform random polynomial with small degrees and coefficients.
BiPoly random_poly(std::mt19937& rng, int max_deg, bool allow_zero) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> nterms(1, 4);
  BiPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    p += BiPoly::term(Rational(coeff(rng)), deg(rng), deg(rng));
  }
  if (!allow_zero && p.is_zero()) p += ONE;
  return p;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  return RatFunc(random_poly(rng, 3, true), random_poly(rng, 2, false));
}

// Long-division oracle for univariate series expansion in q: given
// numerator and denominator coefficient lists (den[0] != 0), produce
// the quotient series coefficients 0..order.
std::vector<Rational> long_division(std::vector<Rational> num,
                                    const std::vector<Rational>& den, int order) {
  std::vector<Rational> out;
  num.resize(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    const Rational c = num[static_cast<std::size_t>(i)] / den[0];
    out.push_back(c);
    for (std::size_t j = 0; j < den.size() && i + j <= static_cast<std::size_t>(order); ++j) {
      num[static_cast<std::size_t>(i) + j] -= c * den[j];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("monomial order is graded lexicographic with q above u") {
  MonomialOrder less;
  CHECK(less({0, 0}, {1, 0}));
  CHECK(less({1, 0}, {0, 2}));   // total degree decides first
  CHECK(less({0, 1}, {1, 0}));   // same total degree: q ranks above u
  CHECK(!less({1, 0}, {0, 1}));
  CHECK(!less({1, 1}, {1, 1}));
}

TEST_CASE("polynomial arithmetic basics") {
  const BiPoly p = (ONE + Q) * (ONE - Q);
  CHECK(p == ONE - Q * Q);
  CHECK((p - p).is_zero());
  CHECK(p.degree_q() == 2);
  CHECK(p.degree_u() == 0);
  CHECK((Q * U).total_degree() == 2);
  CHECK(BiPoly(0L).is_zero());
  CHECK((ONE + Q - Q) == ONE);

  const BiPoly s = (ONE + Q + U).pow(2);
  CHECK(s.coeff(1, 1) == 2);
  CHECK(s.coeff(0, 0) == 1);
  CHECK(s.coeff(2, 0) == 1);
  CHECK(s.term_count() == 6);
}

TEST_CASE("canonical polynomial strings ascend from the constant term") {
  CHECK(BiPoly().str() == "0");
  CHECK((ONE + Q + Q * Q).str() == "1+q+q^2");
  CHECK((ONE - U).str() == "1-u");
  CHECK((Q * U - BiPoly(2L) * Q + ONE).str() == "1-2*q+q*u");
  CHECK(BiPoly::term(Rational(-1), 0, 0).str() == "-1");
  CHECK(BiPoly::term(make_rational(1, 2), 1, 0).str() == "1/2*q");
  CHECK((Q.pow(3) * U.pow(2)).str() == "q^3*u^2");
}

TEST_CASE("evaluation and substitution") {
  const BiPoly p = ONE + Q * U + Q.pow(2);
  CHECK(p.eval(Rational(2), Rational(3)) == Rational(11));
  CHECK(p.eval_q(Rational(1)) == BiPoly(2L) + U);
  CHECK(p.eval_u(Rational(0)) == ONE + Q.pow(2));
  CHECK(p.subst_q_power(2) == ONE + Q.pow(2) * U + Q.pow(4));
  // u -> q^3
  CHECK(p.subst_u(Q.pow(3)) == ONE + Q.pow(4) + Q.pow(2));
  // u -> q*u shifts the exponent by one
  CHECK(U.subst_u(Q * U) == Q * U);
}

TEST_CASE("content and primitive part") {
  const BiPoly p = BiPoly::term(make_rational(2, 3), 1, 0) + BiPoly::term(make_rational(4, 3), 0, 1);
  CHECK(p.content() == make_rational(2, 3));
  const BiPoly pp = p.primitive_part();
  CHECK(pp == Q + BiPoly(2L) * U);
  CHECK((-p).primitive_part() == pp);
  CHECK(BiPoly().content() == 0);
}

TEST_CASE("exact division") {
  const BiPoly a = (ONE + Q + U) * (Q - U) * (Q - U);
  CHECK(divexact(a, Q - U) == (ONE + Q + U) * (Q - U));
  CHECK(divexact(a, (Q - U) * (Q - U)) == ONE + Q + U);
  CHECK_THROWS_AS(divexact(a, BiPoly()), std::domain_error);
  CHECK_THROWS_AS(divexact(ONE + Q, Q), std::domain_error);
  CHECK(divexact(a, a).is_one());
}

TEST_CASE("gcd on hand-factored inputs") {
  SUBCASE("univariate in q") {
    const BiPoly a = (ONE + Q) * (ONE + Q + Q * Q);
    const BiPoly b = (ONE + Q) * (ONE - Q);
    const BiPoly g = gcd(a, b);
    CHECK(g == ONE + Q);
  }
  SUBCASE("bivariate common factor") {
    const BiPoly f = Q - U;
    const BiPoly a = f * (Q + U + ONE);
    const BiPoly b = f * (ONE + Q * U);
    CHECK(gcd(a, b) == f);
  }
  SUBCASE("coprime inputs") {
    CHECK(gcd(ONE + Q, ONE + U) == ONE);
    CHECK(gcd(Q, U) == ONE);
    CHECK(gcd(ONE + Q, BiPoly(7L)) == ONE);
  }
  SUBCASE("zero operands") {
    CHECK(gcd(BiPoly(), Q + ONE) == Q + ONE);
    CHECK(gcd(Q + ONE, BiPoly()) == Q + ONE);
    CHECK(gcd(BiPoly(), BiPoly()).is_zero());
  }
  SUBCASE("mixed variable support") {
    // One operand in q only: the gcd divides the other's q-content.
    const BiPoly a = (ONE + Q) * (ONE + Q);
    const BiPoly b = (ONE + Q) * (U + Q * U);  // (1+q)^2 u
    CHECK(gcd(a, b) == (ONE + Q) * (ONE + Q));
    CHECK(gcd(ONE + Q, U * (ONE + U)) == ONE);
  }
}

TEST_CASE("gcd product property on random inputs") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 40; ++i) {
    const BiPoly p1 = random_poly(rng, 2, false);
    const BiPoly p2 = random_poly(rng, 2, false);
    const BiPoly h = random_poly(rng, 2, false);
    const BiPoly g = gcd(p1 * h, p2 * h);
    const BiPoly expected = (gcd(p1, p2) * h).primitive_part();
    CHECK(g == expected);
  }
}

TEST_CASE("rational function canonical form") {
  // Telescoping factor reduces to a polynomial.
  CHECK(RatFunc(ONE - Q * Q, ONE - Q) == RatFunc(ONE + Q));
  // Common factors cancel; the canonical denominator keeps its minimal
  // term positive, so (1-u)/(1-q) is already canonical.
  const RatFunc f((ONE - U) * (ONE + Q), (ONE - Q) * (ONE + Q));
  CHECK(f.num() == ONE - U);
  CHECK(f.den() == ONE - Q);
  CHECK(f.str() == "(1-u)/(1-q)");
  // Scale invariance.
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const BiPoly n = random_poly(rng, 3, true);
    const BiPoly d = random_poly(rng, 3, false);
    const BiPoly c = random_poly(rng, 2, false);
    CHECK(RatFunc(n * c, d * c) == RatFunc(n, d));
  }
  CHECK_THROWS_WITH_AS(RatFunc(ONE, BiPoly()), "division by zero polynomial",
                       std::domain_error);
  // Zero normalizes to 0/1.
  CHECK(RatFunc(BiPoly(), ONE + Q).den().is_one());
  // Rational content moves into the numerator.
  const RatFunc h(ONE, BiPoly::term(make_rational(1, 2), 1, 0));
  CHECK(h.num() == BiPoly(2L));
  CHECK(h.den() == Q);
}

TEST_CASE("rational function field axioms on random inputs") {
  std::mt19937 rng(123456);
  for (int i = 0; i < 25; ++i) {
    const RatFunc a = random_ratfunc(rng);
    const RatFunc b = random_ratfunc(rng);
    const RatFunc c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * RatFunc(1) == a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFunc(1));
      CHECK(a.pow(-2) * a.pow(3) == a);
    }
    // Cross-multiplication equality agrees with canonical equality.
    const bool cross_equal = a.num() * b.den() == b.num() * a.den();
    CHECK(cross_equal == (a == b));
  }
}

TEST_CASE("rational function strings") {
  CHECK(RatFunc(-BiPoly(1L), ONE + Q).str() == "-1/(1+q)");
  CHECK(RatFunc(Q, ONE).str() == "q");
  CHECK(RatFunc(make_rational(-3, 2)).str() == "-3/2");
  CHECK(RatFunc(Q, (ONE + Q) * (ONE + Q + Q * Q)).str() == "q/(1+2*q+2*q^2+q^3)");
}

TEST_CASE("evaluation of rational functions") {
  const RatFunc beta1(-BiPoly(1L), ONE + Q);
  CHECK(beta1.eval(Rational(1), Rational(0)) == make_rational(-1, 2));
  const RatFunc x_bracket(ONE - U, ONE - Q);
  CHECK(x_bracket.eval(Rational(2), Rational(8)) == Rational(7));  // [3]_2 = 7
  CHECK_THROWS_AS(x_bracket.eval(Rational(1), Rational(1)), PoleError);
  try {
    x_bracket.eval(Rational(1), Rational(5));
  } catch (const PoleError& e) {
    CHECK(e.denominator() == "1-q");
  }
  // Partial evaluation leaves a function of u.
  const RatFunc at2 = x_bracket.eval_q(Rational(2));
  CHECK(at2 == RatFunc(U - ONE, ONE));
  CHECK_THROWS_AS(x_bracket.eval_q(Rational(1)), PoleError);
}

TEST_CASE("series expansion matches the long division oracle") {
  // -1/(1+q): alternating signs, the expansion of the first nontrivial
  // cumulative example.
  const RatFunc f(-BiPoly(1L), ONE + Q);
  const TruncSeries s = TruncSeries::expand(f, SeriesVar::Q, 3);
  const std::vector<Rational> oracle =
      long_division({Rational(-1)}, {Rational(1), Rational(1)}, 3);
  REQUIRE(oracle.size() == 4);
  for (int i = 0; i <= 3; ++i) {
    CHECK(s.coefficient(i) == RatFunc(oracle[static_cast<std::size_t>(i)]));
  }
  CHECK(s.coefficient(0) == RatFunc(-1));
  CHECK(s.coefficient(1) == RatFunc(1));
  CHECK(s.coefficient(2) == RatFunc(-1));
  CHECK(s.coefficient(3) == RatFunc(1));
}

TEST_CASE("series expansion of polynomials returns their coefficients") {
  const RatFunc p(ONE + BiPoly(3L) * Q + Q.pow(5));
  const TruncSeries s = TruncSeries::expand(p, SeriesVar::Q, 4);
  CHECK(s.coefficient(0) == RatFunc(1));
  CHECK(s.coefficient(1) == RatFunc(3));
  CHECK(s.coefficient(2).is_zero());
  CHECK(s.coefficient(4).is_zero());
}

TEST_CASE("series expansion with the other variable in coefficients") {
  // [x]_q = (1-u)/(1-q) = (1-u) * sum q^i.
  const RatFunc f(ONE - U, ONE - Q);
  const TruncSeries s = TruncSeries::expand(f, SeriesVar::Q, 5);
  for (int i = 0; i <= 5; ++i) CHECK(s.coefficient(i) == RatFunc(ONE - U));
}

TEST_CASE("series pole at origin") {
  CHECK_THROWS_WITH_AS(TruncSeries::expand(RatFunc(ONE, Q), SeriesVar::Q, 2),
                       "pole at origin", PoleError);
  // No pole in the other variable.
  CHECK(TruncSeries::expand(RatFunc(ONE, Q), SeriesVar::U, 2).coefficient(0) ==
        RatFunc(ONE, Q));
}

TEST_CASE("series product and inverse are consistent with expansion") {
  std::mt19937 rng(991);
  for (int i = 0; i < 10; ++i) {
    // Denominators of the form 1 + q * (random) are invertible at 0.
    const BiPoly d1 = ONE + Q * random_poly(rng, 2, true);
    const BiPoly d2 = ONE + Q * random_poly(rng, 2, true);
    const BiPoly n1 = random_poly(rng, 2, true);
    const BiPoly n2 = random_poly(rng, 2, true);
    const RatFunc f(n1, d1);
    const RatFunc g(n2, d2);
    const int K = 6;
    const TruncSeries sf = TruncSeries::expand(f, SeriesVar::Q, K);
    const TruncSeries sg = TruncSeries::expand(g, SeriesVar::Q, K);
    CHECK(sf * sg == TruncSeries::expand(f * g, SeriesVar::Q, K));
    CHECK(sf + sg == TruncSeries::expand(f + g, SeriesVar::Q, K));
    CHECK(TruncSeries::expand(RatFunc(d2, d1), SeriesVar::Q, K).inverse() ==
          TruncSeries::expand(RatFunc(d1, d2), SeriesVar::Q, K));
  }
}

TEST_CASE("series coefficients must not contain the expansion variable") {
  TruncSeries s(SeriesVar::Q, 3);
  CHECK_THROWS_AS(s.set_coefficient(1, RatFunc(Q)), std::domain_error);
  s.set_coefficient(1, RatFunc(U));  // fine: u is a coefficient variable here
  TruncSeries t(SeriesVar::Aux, 2);
  t.set_coefficient(2, RatFunc(Q * U));  // aux coefficients may use both
  CHECK(t.coefficient(2) == RatFunc(Q * U));
}

TEST_CASE("series shift and power") {
  const TruncSeries x = TruncSeries::variable(SeriesVar::Aux, 4);
  CHECK(x.shifted(2) == x.pow(3));
  const TruncSeries geo = TruncSeries::expand(RatFunc(ONE, ONE - Q), SeriesVar::Q, 4);
  CHECK(geo.coefficient(4) == RatFunc(1));
  CHECK(geo.inverse().coefficient(1) == RatFunc(-1));
}
