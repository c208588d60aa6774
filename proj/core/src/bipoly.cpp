#include "qbw/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qbw {

BiPoly::BiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, Rational(c));
}

BiPoly::BiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::variable_q() { return q_power(1); }
BiPoly BiPoly::variable_u() { return u_power(1); }

BiPoly BiPoly::q_power(int a) {
  BiPoly p;
  p.terms_.emplace(Monomial{a, 0}, Rational(1));
  return p;
}

BiPoly BiPoly::u_power(int b) {
  BiPoly p;
  p.terms_.emplace(Monomial{0, b}, Rational(1));
  return p;
}

BiPoly BiPoly::term(const Rational& c, int q_exp, int u_exp) {
  BiPoly p;
  if (sgn(c) != 0) p.terms_.emplace(Monomial{q_exp, u_exp}, c);
  return p;
}

bool BiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
         terms_.begin()->second == 1;
}

bool BiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int BiPoly::degree_q() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.q_exp);
  return d;
}

int BiPoly::degree_u() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.u_exp);
  return d;
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Monomial& m = terms_.rbegin()->first;
  return m.q_exp + m.u_exp;
}

Rational BiPoly::coeff(int q_exp, int u_exp) const {
  auto it = terms_.find(Monomial{q_exp, u_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(Monomial{ma.q_exp + mb.q_exp, ma.u_exp + mb.u_exp}, ca * cb);
    }
  }
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BiPoly BiPoly::scaled(const Rational& c) const {
  BiPoly r;
  if (sgn(c) == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(1L);
  BiPoly b = *this;
  while (e > 0) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return r;
}

Monomial BiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& BiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

int BiPoly::leading_sign() const {
  return terms_.empty() ? 0 : sgn(terms_.rbegin()->second);
}

Monomial BiPoly::trailing_monomial() const {
  if (terms_.empty()) throw std::domain_error("trailing term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& BiPoly::trailing_coeff() const {
  if (terms_.empty()) throw std::domain_error("trailing term of zero polynomial");
  return terms_.begin()->second;
}

int BiPoly::trailing_sign() const {
  return terms_.empty() ? 0 : sgn(terms_.begin()->second);
}

Rational BiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Int num_gcd(0);
  Int den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

BiPoly BiPoly::primitive_part() const {
  if (terms_.empty()) return BiPoly();
  Rational c = content();
  if (leading_sign() < 0) c = -c;
  return divide_scalar(*this, c);
}

Rational BiPoly::eval(const Rational& q_value, const Rational& u_value) const {
  std::vector<Rational> qp(static_cast<std::size_t>(degree_q() + 2), Rational(1));
  std::vector<Rational> up(static_cast<std::size_t>(degree_u() + 2), Rational(1));
  for (std::size_t i = 1; i < qp.size(); ++i) qp[i] = qp[i - 1] * q_value;
  for (std::size_t i = 1; i < up.size(); ++i) up[i] = up[i - 1] * u_value;
  Rational r(0);
  for (const auto& [m, c] : terms_) {
    r += c * qp[static_cast<std::size_t>(m.q_exp)] * up[static_cast<std::size_t>(m.u_exp)];
  }
  return r;
}

BiPoly BiPoly::eval_q(const Rational& q_value) const {
  std::vector<Rational> qp(static_cast<std::size_t>(degree_q() + 2), Rational(1));
  for (std::size_t i = 1; i < qp.size(); ++i) qp[i] = qp[i - 1] * q_value;
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    r.add_term(Monomial{0, m.u_exp}, c * qp[static_cast<std::size_t>(m.q_exp)]);
  }
  return r;
}

BiPoly BiPoly::eval_u(const Rational& u_value) const {
  std::vector<Rational> up(static_cast<std::size_t>(degree_u() + 2), Rational(1));
  for (std::size_t i = 1; i < up.size(); ++i) up[i] = up[i - 1] * u_value;
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    r.add_term(Monomial{m.q_exp, 0}, c * up[static_cast<std::size_t>(m.u_exp)]);
  }
  return r;
}

BiPoly BiPoly::subst_q_power(int m) const {
  if (m < 1) throw std::domain_error("q-power substitution requires m >= 1");
  BiPoly r;
  for (const auto& [mon, c] : terms_) {
    r.terms_.emplace(Monomial{mon.q_exp * m, mon.u_exp}, c);
  }
  return r;
}

BiPoly BiPoly::subst_u(const BiPoly& image) const {
  // Horner in u: group coefficients by u-exponent, fold from the top.
  std::vector<BiPoly> by_u = coeffs_in_u();
  BiPoly r;
  for (auto it = by_u.rbegin(); it != by_u.rend(); ++it) {
    r = r * image + *it;
  }
  return r;
}

std::vector<BiPoly> BiPoly::coeffs_in_q() const {
  std::vector<BiPoly> out(static_cast<std::size_t>(degree_q() + 1));
  for (const auto& [m, c] : terms_) {
    out[static_cast<std::size_t>(m.q_exp)].add_term(Monomial{0, m.u_exp}, c);
  }
  return out;
}

std::vector<BiPoly> BiPoly::coeffs_in_u() const {
  std::vector<BiPoly> out(static_cast<std::size_t>(degree_u() + 1));
  for (const auto& [m, c] : terms_) {
    out[static_cast<std::size_t>(m.u_exp)].add_term(Monomial{m.q_exp, 0}, c);
  }
  return out;
}

namespace {

void append_power(std::string& s, const char* var, int e) {
  s += var;
  if (e != 1) {
    s += '^';
    s += std::to_string(e);
  }
}

}  // namespace

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? '-' : '+';
    }
    first = false;
    if (neg) c = -c;
    const bool has_vars = m.q_exp != 0 || m.u_exp != 0;
    if (!has_vars) {
      s += to_string(c);
      continue;
    }
    if (c != 1) {
      s += to_string(c);
      s += '*';
    }
    if (m.q_exp != 0) {
      append_power(s, "q", m.q_exp);
      if (m.u_exp != 0) s += '*';
    }
    if (m.u_exp != 0) append_power(s, "u", m.u_exp);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

BiPoly divide_scalar(const BiPoly& a, const Rational& c) {
  if (sgn(c) == 0) throw std::domain_error("division by zero scalar");
  Rational inv(c.get_den(), c.get_num());
  inv.canonicalize();
  return a.scaled(inv);
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) return divide_scalar(a, b.constant_value());
  BiPoly rem = a;
  BiPoly quot;
  const Monomial bm = b.leading_monomial();
  const Rational& bc = b.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial rm = rem.leading_monomial();
    const int dq = rm.q_exp - bm.q_exp;
    const int du = rm.u_exp - bm.u_exp;
    if (dq < 0 || du < 0) throw std::domain_error("inexact polynomial division");
    Rational c = rem.leading_coeff() / bc;
    BiPoly t = BiPoly::term(c, dq, du);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

}  // namespace qbw
