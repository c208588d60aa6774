#include "qbw/bipoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

// gcd over Q[q,u], computed on primitive integer representatives with a
// primitive pseudo-remainder sequence.  The bivariate case runs the PRS
// in the variable of smaller degree, with coefficients in Z[other var].

namespace qbw {
namespace {

// ---------------------------------------------------------------- ZPoly
// Dense univariate integer polynomial; no trailing zeros; zero == {}.
using ZPoly = std::vector<Int>;

int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void zp_trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

ZPoly zp_const(const Int& c) {
  ZPoly p;
  if (sgn(c) != 0) p.push_back(c);
  return p;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zp_trim(r);
  return r;
}

ZPoly zp_scale(const ZPoly& a, const Int& c) {
  if (sgn(c) == 0) return {};
  ZPoly r = a;
  for (Int& x : r) x *= c;
  return r;
}

void zp_sub_inplace(ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zp_trim(a);
}

Int zp_content(const ZPoly& p) {
  Int g(0);
  for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zp_divexact_int(const ZPoly& p, const Int& c) {
  ZPoly r = p;
  for (Int& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

ZPoly zp_pp(const ZPoly& p) {
  if (p.empty()) return {};
  Int c = zp_content(p);
  if (sgn(p.back()) < 0) c = -c;
  return zp_divexact_int(p, c);
}

// Fast coprimality probe: Euclid modulo a fixed 62-bit prime.  A gcd of
// degree zero mod p certifies coprimality over Q.  Inapplicable when a
// leading coefficient vanishes mod p.
constexpr std::uint64_t kProbePrime = 4611686018427387847ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % kProbePrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1ULL) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1ULL;
  }
  return r;
}

std::vector<std::uint64_t> zp_mod_prime(const ZPoly& p) {
  std::vector<std::uint64_t> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] = mpz_fdiv_ui(p[i].get_mpz_t(), kProbePrime);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

bool zp_coprime_probe(const ZPoly& a, const ZPoly& b) {
  std::vector<std::uint64_t> x = zp_mod_prime(a);
  std::vector<std::uint64_t> y = zp_mod_prime(b);
  // Degree drop mod p would make the probe one-sided; require none.
  if (static_cast<int>(x.size()) - 1 != zp_deg(a)) return false;
  if (static_cast<int>(y.size()) - 1 != zp_deg(b)) return false;
  while (!y.empty()) {
    // x mod y over F_p.
    const std::uint64_t inv = powmod(y.back(), kProbePrime - 2);
    while (x.size() >= y.size()) {
      const std::uint64_t c = mulmod(x.back(), inv);
      const std::size_t off = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) {
        const std::uint64_t t = mulmod(c, y[i]);
        std::uint64_t& xi = x[off + i];
        xi = (xi >= t) ? xi - t : xi + kProbePrime - t;
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return x.size() == 1;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
  if (a.empty()) return zp_pp(b);
  if (b.empty()) return zp_pp(a);
  Int cont;
  {
    const Int ca = zp_content(a);
    const Int cb = zp_content(b);
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  if (zp_deg(a) == 0 || zp_deg(b) == 0) return zp_const(cont);
  if (zp_deg(a) >= 2 && zp_deg(b) >= 2 && zp_coprime_probe(a, b)) {
    return zp_const(cont);
  }
  a = zp_pp(a);
  b = zp_pp(b);
  if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
  // Primitive PRS.
  while (true) {
    // Pseudo-remainder of a by b.
    ZPoly r = a;
    const Int lc_b = b.back();
    while (zp_deg(r) >= zp_deg(b)) {
      const Int lc_r = r.back();
      const std::size_t off = r.size() - b.size();
      ZPoly scaled = zp_scale(r, lc_b);
      for (std::size_t i = 0; i + 1 < b.size(); ++i) scaled[off + i] -= lc_r * b[i];
      scaled[r.size() - 1] = 0;
      zp_trim(scaled);
      r = std::move(scaled);
    }
    if (r.empty()) return zp_scale(zp_pp(b), cont);
    a = std::move(b);
    b = zp_pp(r);
    if (zp_deg(b) == 0) return zp_const(cont);
  }
}

// --------------------------------------------------------------- ZZPoly
// Dense polynomial in a main variable with ZPoly coefficients.
using ZZPoly = std::vector<ZPoly>;

int zz_deg(const ZZPoly& p) { return static_cast<int>(p.size()) - 1; }

void zz_trim(ZZPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

ZPoly zz_content(const ZZPoly& p) {
  ZPoly g;
  for (const ZPoly& c : p) {
    if (!c.empty()) g = zp_gcd(g, c);
    if (zp_deg(g) == 0 && !g.empty() && g[0] == 1) break;
  }
  return g;
}

ZZPoly zz_divexact_zp(const ZZPoly& p, const ZPoly& d) {
  // Coefficient-wise exact division by d via integer long division.
  ZZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    // Long division of p[i] by d; exactness is guaranteed by the caller.
    ZPoly rem = p[i];
    ZPoly quot(rem.size(), Int(0));
    while (!rem.empty() && zp_deg(rem) >= zp_deg(d)) {
      Int c;
      mpz_divexact(c.get_mpz_t(), rem.back().get_mpz_t(), d.back().get_mpz_t());
      const std::size_t off = rem.size() - d.size();
      quot[off] = c;
      for (std::size_t j = 0; j < d.size(); ++j) rem[off + j] -= c * d[j];
      zp_trim(rem);
    }
    if (!rem.empty()) throw std::domain_error("inexact content division");
    zp_trim(quot);
    out[i] = std::move(quot);
  }
  return out;
}

ZZPoly zz_pp(const ZZPoly& p, ZPoly* content_out = nullptr) {
  ZPoly c = zz_content(p);
  if (content_out) *content_out = c;
  if (c.empty()) return {};
  if (zp_deg(c) == 0 && c[0] == 1) return p;
  return zz_divexact_zp(p, c);
}

ZZPoly zz_scale_zp(const ZZPoly& p, const ZPoly& c) {
  ZZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = zp_mul(p[i], c);
  zz_trim(r);
  return r;
}

// Pseudo-remainder: repeatedly cancels the top term after scaling by
// lc(b); the result equals lc(b)^k * a mod b for some k.
ZZPoly zz_prem(ZZPoly a, const ZZPoly& b) {
  const ZPoly& lc_b = b.back();
  while (zz_deg(a) >= zz_deg(b)) {
    const ZPoly lc_a = a.back();
    const std::size_t off = a.size() - b.size();
    ZZPoly scaled = zz_scale_zp(a, lc_b);
    if (scaled.size() < a.size()) scaled.resize(a.size());
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      zp_sub_inplace(scaled[off + i], zp_mul(lc_a, b[i]));
    }
    if (scaled.size() >= a.size()) scaled[a.size() - 1] = {};
    zz_trim(scaled);
    a = std::move(scaled);
    if (a.empty()) break;
  }
  return a;
}

ZZPoly zz_gcd(ZZPoly a, ZZPoly b) {
  ZPoly cont_a, cont_b;
  a = zz_pp(a, &cont_a);
  b = zz_pp(b, &cont_b);
  const ZPoly cont = zp_gcd(cont_a, cont_b);
  if (zz_deg(a) < zz_deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZZPoly r = zz_prem(a, b);
    a = std::move(b);
    b = zz_pp(r);
  }
  return zz_scale_zp(a, cont);
}

// ---------------------------------------------------- BiPoly conversion

// View an integer BiPoly as dense in `main_q ? q : u` with ZPoly
// coefficients in the other variable.
ZZPoly to_zz(const BiPoly& p, bool main_q) {
  ZZPoly out(static_cast<std::size_t>((main_q ? p.degree_q() : p.degree_u()) + 1));
  const int inner_deg = main_q ? p.degree_u() : p.degree_q();
  for (auto& c : out) c.assign(static_cast<std::size_t>(inner_deg + 1), Int(0));
  for (const auto& [m, c] : p.terms()) {
    const int outer = main_q ? m.q_exp : m.u_exp;
    const int inner = main_q ? m.u_exp : m.q_exp;
    out[static_cast<std::size_t>(outer)][static_cast<std::size_t>(inner)] = c.get_num();
  }
  for (auto& c : out) zp_trim(c);
  zz_trim(out);
  return out;
}

BiPoly from_zz(const ZZPoly& p, bool main_q) {
  BiPoly out;
  for (std::size_t outer = 0; outer < p.size(); ++outer) {
    for (std::size_t inner = 0; inner < p[outer].size(); ++inner) {
      const Int& c = p[outer][inner];
      if (sgn(c) == 0) continue;
      const int qe = main_q ? static_cast<int>(outer) : static_cast<int>(inner);
      const int ue = main_q ? static_cast<int>(inner) : static_cast<int>(outer);
      out += BiPoly::term(Rational(c), qe, ue);
    }
  }
  return out;
}

ZPoly to_zp(const BiPoly& p, bool var_q) {
  ZPoly out(static_cast<std::size_t>((var_q ? p.degree_q() : p.degree_u()) + 1), Int(0));
  for (const auto& [m, c] : p.terms()) {
    out[static_cast<std::size_t>(var_q ? m.q_exp : m.u_exp)] = c.get_num();
  }
  zp_trim(out);
  return out;
}

BiPoly from_zp(const ZPoly& p, bool var_q) {
  BiPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    out += BiPoly::term(Rational(p[i]), var_q ? static_cast<int>(i) : 0,
                        var_q ? 0 : static_cast<int>(i));
  }
  return out;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return BiPoly(1L);

  const BiPoly pa = a.primitive_part();
  const BiPoly pb = b.primitive_part();

  const bool a_has_q = pa.degree_q() > 0;
  const bool a_has_u = pa.degree_u() > 0;
  const bool b_has_q = pb.degree_q() > 0;
  const bool b_has_u = pb.degree_u() > 0;

  // Univariate in the same variable.
  if (!a_has_u && !b_has_u) return from_zp(zp_gcd(to_zp(pa, true), to_zp(pb, true)), true);
  if (!a_has_q && !b_has_q) return from_zp(zp_gcd(to_zp(pa, false), to_zp(pb, false)), false);

  // One operand free of a variable the other uses: the gcd divides the
  // content of the mixed operand in that variable.
  auto content_in = [](const BiPoly& p, bool main_q) {
    return zz_content(to_zz(p, main_q));
  };
  if (!a_has_u) {
    // a in q only; gcd(a, content of b viewed in u).
    return from_zp(zp_gcd(to_zp(pa, true), content_in(pb, false)), true);
  }
  if (!b_has_u) {
    return from_zp(zp_gcd(to_zp(pb, true), content_in(pa, false)), true);
  }
  if (!a_has_q) {
    return from_zp(zp_gcd(to_zp(pa, false), content_in(pb, true)), false);
  }
  if (!b_has_q) {
    return from_zp(zp_gcd(to_zp(pb, false), content_in(pa, true)), false);
  }

  // Genuinely bivariate: run the PRS in the variable of smaller degree.
  const int dq = std::max(pa.degree_q(), pb.degree_q());
  const int du = std::max(pa.degree_u(), pb.degree_u());
  const bool main_q = dq <= du;
  ZZPoly g = zz_gcd(to_zz(pa, main_q), to_zz(pb, main_q));
  BiPoly r = from_zz(g, main_q).primitive_part();
  return r;
}

}  // namespace qbw
