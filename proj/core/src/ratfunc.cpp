#include "qbw/ratfunc.hpp"

#include <ostream>
#include <utility>

namespace qbw {

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize(Reduced::No);
}

RatFunc::RatFunc(BiPoly num, BiPoly den, Reduced reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize(reduced);
}

void RatFunc::normalize(Reduced reduced) {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num_.is_zero()) {
    den_ = BiPoly(1L);
    return;
  }
  if (reduced == Reduced::No && !den_.is_constant()) {
    const BiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  // Scale so the denominator is integer-primitive and its minimal term
  // has a positive coefficient (so 1-q, 1+q, 1-u are canonical).
  Rational c = den_.content();
  if (den_.trailing_sign() < 0) c = -c;
  if (c != 1) {
    den_ = divide_scalar(den_, c);
    num_ = divide_scalar(num_, c);
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("not a constant rational function");
  return num_.constant_value();
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // Reduce via the denominator gcd: with g = gcd(d1, d2),
  // n1/d1 + n2/d2 = (n1*(d2/g) + n2*(d1/g)) / (d1*(d2/g)).
  const BiPoly g = gcd(den_, o.den_);
  BiPoly d2g = g.is_one() ? o.den_ : divexact(o.den_, g);
  BiPoly d1g = g.is_one() ? den_ : divexact(den_, g);
  BiPoly n = num_ * d2g + o.num_ * d1g;
  BiPoly d = den_ * d2g;
  *this = RatFunc(std::move(n), std::move(d), Reduced::No);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  // Cross-cancellation keeps the product reduced without a large gcd.
  const BiPoly g1 = gcd(num_, o.den_);
  const BiPoly g2 = gcd(o.num_, den_);
  BiPoly n1 = g1.is_one() ? num_ : divexact(num_, g1);
  BiPoly d2 = g1.is_one() ? o.den_ : divexact(o.den_, g1);
  BiPoly n2 = g2.is_one() ? o.num_ : divexact(o.num_, g2);
  BiPoly d1 = g2.is_one() ? den_ : divexact(den_, g2);
  *this = RatFunc(n1 * n2, d1 * d2, Reduced::Yes);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero polynomial");
  return RatFunc(den_, num_, Reduced::Yes);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1);
  RatFunc b = *this;
  unsigned n = static_cast<unsigned>(e);
  while (n > 0) {
    if (n & 1U) r *= b;
    b *= b;
    n >>= 1U;
  }
  return r;
}

Rational RatFunc::eval(const Rational& q_value, const Rational& u_value) const {
  const Rational d = den_.eval(q_value, u_value);
  if (sgn(d) == 0) {
    throw PoleError("pole: denominator " + den_.str() + " vanishes at q=" +
                        to_string(q_value) + ", u=" + to_string(u_value),
                    den_.str());
  }
  return num_.eval(q_value, u_value) / d;
}

RatFunc RatFunc::eval_q(const Rational& q_value) const {
  const BiPoly d = den_.eval_q(q_value);
  if (d.is_zero()) {
    throw PoleError("pole: denominator " + den_.str() + " vanishes at q=" +
                        to_string(q_value),
                    den_.str());
  }
  return RatFunc(num_.eval_q(q_value), d, Reduced::No);
}

RatFunc RatFunc::subst_q_power(int m) const {
  return RatFunc(num_.subst_q_power(m), den_.subst_q_power(m), Reduced::Yes);
}

RatFunc RatFunc::subst_u(const BiPoly& image) const {
  return RatFunc(num_.subst_u(image), den_.subst_u(image), Reduced::No);
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  const auto wrap = [](const BiPoly& p) {
    std::string s = p.str();
    if (p.term_count() > 1) return "(" + s + ")";
    return s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace qbw
