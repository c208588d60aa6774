#include "qbw/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qbw/bernoulli.hpp"
#include "qbw/qcore.hpp"

namespace qbw {

namespace {

// Work budget for one Riemann level (number of sample points).
constexpr long kPointBudget = 4'194'304;
// Work budget for the norm diagnostic grid (pair loop is quadratic).
constexpr long kNormGridBudget = 2'048;

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Int power_of(long p, int e) {
  Int m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return m;
}

// Valuation of a nonzero integer at p, computed by factor removal.
int int_valuation(const Int& x, long p) {
  Int rest;
  const Int pz(p);
  return static_cast<int>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

int long_valuation(long x, long p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

long checked_point_count(long p, int level, long budget) {
  long total = 1;
  for (int i = 0; i < level; ++i) {
    if (total > budget / p) {
      throw std::domain_error("level budget exceeded");
    }
    total *= p;
  }
  return total;
}

}  // namespace

// ---- PadicInt -------------------------------------------------------------

PadicInt::PadicInt(long p, int precision, Int value)
    : p_(p), precision_(precision), modulus_(power_of(p, precision)) {
  if (precision < 1) {
    throw std::domain_error("p-adic precision must be at least 1");
  }
  mpz_mod(residue_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

int PadicInt::valuation() const {
  if (is_zero()) return precision_;
  return std::min(precision_, int_valuation(residue_, p_));
}

void PadicInt::align(const PadicInt& o) {
  if (p_ != o.p_) {
    throw std::logic_error("p-adic arithmetic requires matching primes");
  }
  if (o.precision_ < precision_) {
    precision_ = o.precision_;
    modulus_ = o.modulus_;
    mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
  }
}

PadicInt& PadicInt::operator+=(const PadicInt& o) {
  align(o);
  residue_ += o.residue_;
  mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
  return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) {
  align(o);
  residue_ -= o.residue_;
  mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
  return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& o) {
  align(o);
  residue_ *= o.residue_;
  mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
  return *this;
}

PadicInt PadicInt::operator-() const {
  return PadicInt(p_, precision_, -residue_);
}

PadicInt PadicInt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return PadicInt(p_, precision_, powmod(residue_, Int(e), modulus_));
}

PadicInt PadicInt::inverse() const {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(),
                 modulus_.get_mpz_t()) == 0) {
    throw std::domain_error("p-adic inverse requires a unit (valuation 0)");
  }
  return PadicInt(p_, precision_, inv);
}

bool PadicInt::operator==(const PadicInt& o) const {
  if (p_ != o.p_) return false;
  if (precision_ == o.precision_) return residue_ == o.residue_;
  const PadicInt& lo = precision_ < o.precision_ ? *this : o;
  const PadicInt& hi = precision_ < o.precision_ ? o : *this;
  Int reduced;
  mpz_mod(reduced.get_mpz_t(), hi.residue_.get_mpz_t(),
          lo.modulus_.get_mpz_t());
  return reduced == lo.residue_;
}

std::string PadicInt::str() const { return residue_.get_str(); }

// ---- QPoint ----------------------------------------------------------------

QPoint::QPoint(long p, int precision, long q)
    : p_(p),
      precision_(precision),
      q_int_(q),
      q_(PadicInt(std::max(p, 3L), std::max(precision, 1), Int(q))) {
  if (p < 3 || !is_small_prime(p)) {
    throw std::domain_error("p must be an odd prime");
  }
  if (precision < 1) {
    throw std::domain_error("p-adic precision must be at least 1");
  }
  if ((q - 1) % p != 0) {
    throw std::domain_error(
        "invalid q: the integral requires |q-1|_p < p^(-1/(p-1)), "
        "i.e. v_p(q-1) >= 1");
  }
}

PadicInt QPoint::q_pow(const Int& e) const {
  return PadicInt(p_, precision_, powmod(q_.residue(), e, q_.modulus()));
}

// ---- Riemann levels ---------------------------------------------------------

RiemannSum riemann_sum(const std::function<PadicInt(long)>& f, int level,
                       const QPoint& qp, int jobs) {
  if (level < 1) throw std::domain_error("level must be at least 1");
  const long p = qp.prime();
  const int m = qp.precision();
  const long total = checked_point_count(p, level, kPointBudget);
  const Int& mod = qp.q().modulus();

  jobs = std::clamp(jobs, 1, 64);
  std::vector<std::pair<Int, Int>> partial(static_cast<size_t>(jobs));
  auto run_chunk = [&](int c) {
    const long lo = total / jobs * c + std::min<long>(c, total % jobs);
    const long hi =
        total / jobs * (c + 1) + std::min<long>(c + 1, total % jobs);
    Int s = 0, d = 0;
    Int qx = powmod(qp.q().residue(), Int(lo), mod);
    for (long x = lo; x < hi; ++x) {
      const PadicInt fx = f(x);
      if (fx.prime() != p) {
        throw std::logic_error("integrand prime differs from the point");
      }
      s += fx.residue() * qx;
      d += qx;
      qx *= qp.q().residue();
      mpz_mod(qx.get_mpz_t(), qx.get_mpz_t(), mod.get_mpz_t());
    }
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
    mpz_mod(d.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    partial[static_cast<size_t>(c)] = {std::move(s), std::move(d)};
  };

  if (jobs == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int c = 0; c < jobs; ++c) pool.emplace_back(run_chunk, c);
    for (auto& t : pool) t.join();
  }

  Int s = 0, d = 0;
  for (const auto& [ps, pd] : partial) {
    s += ps;
    d += pd;
  }

  RiemannSum out{PadicInt(p, m, s), PadicInt(p, m, d), level, 0,
                 std::nullopt};
  out.loss = out.denominator.valuation();
  if (out.loss != level) {
    // In the admissible region v(1 + q + ... + q^(p^N - 1)) is exactly N;
    // anything else indicates a broken precondition.
    throw std::domain_error("denominator valuation differs from the level");
  }
  if (out.loss >= m) throw std::domain_error("insufficient precision");

  if (out.numerator.valuation() >= out.loss) {
    const Int scale = power_of(p, out.loss);
    PadicInt num(p, m - out.loss, out.numerator.residue() / scale);
    PadicInt den(p, m - out.loss, out.denominator.residue() / scale);
    out.value = num * den.inverse();
  }
  return out;
}

ErrorValuation error_valuation(const RiemannSum& s, const Rational& target) {
  const long p = s.numerator.prime();
  const int m = s.numerator.precision();
  const Int a = target.get_num();
  const Int b = target.get_den();
  const int vb = b == 1 ? 0 : int_valuation(b, p);
  Int t = s.numerator.residue() * b - a * s.denominator.residue();
  mpz_mod(t.get_mpz_t(), t.get_mpz_t(), s.numerator.modulus().get_mpz_t());
  if (t == 0) {
    return {m - s.loss - vb, false};
  }
  return {int_valuation(t, p) - s.loss - vb, true};
}

bool convergence_witness(const std::vector<ErrorValuation>& errors,
                         int from_level) {
  // errors[i] belongs to level i + 1; compare consecutive pairs from the
  // requested level on.
  const size_t start = static_cast<size_t>(std::max(from_level, 2));
  if (errors.size() < start) return false;
  for (size_t i = start; i < errors.size(); ++i) {
    const ErrorValuation& prev = errors[i - 1];
    const ErrorValuation& cur = errors[i];
    if (!cur.exact) continue;  // at working precision: counts as infinite
    if (!prev.exact) return false;
    if (cur.valuation <= prev.valuation) return false;
  }
  return true;
}

namespace {

// Shared driver: sample f once up to p^levels, then report every level.
ConvergenceReport convergence_run(const std::vector<Int>& samples,
                                  const Rational& target, const QPoint& qp,
                                  int levels) {
  ConvergenceReport rep;
  rep.target = target;
  auto f = [&](long x) {
    return PadicInt(qp.prime(), qp.precision(), samples[static_cast<size_t>(x)]);
  };
  for (int n = 1; n <= levels; ++n) {
    rep.sums.push_back(riemann_sum(f, n, qp));
    rep.errors.push_back(error_valuation(rep.sums.back(), target));
  }
  rep.witness = convergence_witness(rep.errors);
  return rep;
}

std::vector<Int> qint_samples(const QPoint& qp, long total) {
  std::vector<Int> vals;
  vals.reserve(static_cast<size_t>(total));
  const Int& mod = qp.q().modulus();
  Int s = 0, qx = 1;
  for (long x = 0; x < total; ++x) {
    vals.push_back(s);
    s += qx;
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
    qx *= qp.q().residue();
    mpz_mod(qx.get_mpz_t(), qx.get_mpz_t(), mod.get_mpz_t());
  }
  return vals;
}

std::string valuations_str(const std::vector<ErrorValuation>& errors) {
  std::ostringstream os;
  for (size_t i = 0; i < errors.size(); ++i) {
    if (i) os << ",";
    os << (errors[i].exact ? "" : ">=") << errors[i].valuation;
  }
  return os.str();
}

}  // namespace

ConvergenceReport beta_padic(int n, const QPoint& qp, int levels) {
  if (n < 0) throw std::domain_error("moment index must be nonnegative");
  if (levels < 2) throw std::domain_error("at least two levels are needed");
  const long total = checked_point_count(qp.prime(), levels, kPointBudget);
  std::vector<Int> samples = qint_samples(qp, total);
  const Int& mod = qp.q().modulus();
  for (auto& v : samples) v = powmod(v, Int(n), mod);
  const Rational target =
      beta_closed_form(n).eval(Rational(qp.q_integer()), Rational(0));
  return convergence_run(samples, target, qp, levels);
}

ConvergenceReport geometric_integral_padic(int n, const QPoint& qp,
                                           int levels) {
  if (n < 0) throw std::domain_error("exponent must be nonnegative");
  if (levels < 2) throw std::domain_error("at least two levels are needed");
  const long total = checked_point_count(qp.prime(), levels, kPointBudget);
  const Int& mod = qp.q().modulus();
  std::vector<Int> samples;
  samples.reserve(static_cast<size_t>(total));
  const Int step = powmod(qp.q().residue(), Int(n), mod);
  Int cur = 1;
  for (long x = 0; x < total; ++x) {
    samples.push_back(cur);
    cur *= step;
    mpz_mod(cur.get_mpz_t(), cur.get_mpz_t(), mod.get_mpz_t());
  }
  const Rational target =
      integral_qpow(n).eval(Rational(qp.q_integer()), Rational(0));
  return convergence_run(samples, target, qp, levels);
}

ConvergenceReport qbinom_integral_padic(int n, const QPoint& qp, int levels,
                                        Variant variant) {
  if (n < 0) throw std::domain_error("row index must be nonnegative");
  if (levels < 2) throw std::domain_error("at least two levels are needed");
  const long total = checked_point_count(qp.prime(), levels, kPointBudget);
  const Int& mod = qp.q().modulus();

  // Integer Pascal recurrence row by row: next[j] = row[j-1] + q^j row[j].
  std::vector<Int> qpow(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) qpow[static_cast<size_t>(j)] = powmod(qp.q().residue(), Int(j), mod);
  std::vector<Int> row(static_cast<size_t>(n) + 1, Int(0));
  row[0] = 1;
  std::vector<Int> samples;
  samples.reserve(static_cast<size_t>(total));
  for (long x = 0; x < total; ++x) {
    samples.push_back(row[static_cast<size_t>(n)]);
    for (int j = n; j >= 1; --j) {
      row[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] +
          qpow[static_cast<size_t>(j)] * row[static_cast<size_t>(j)];
      mpz_mod(row[static_cast<size_t>(j)].get_mpz_t(),
              row[static_cast<size_t>(j)].get_mpz_t(), mod.get_mpz_t());
    }
  }

  const RatFunc closed(BiPoly(1),
                       BiPoly::q_power(static_cast<int>(choose2(n))) *
                           q_int(n + 1));
  Rational target = closed.eval(Rational(qp.q_integer()), Rational(0));
  if (n % 2 != 0) target = -target;
  if (variant == Variant::AsPrinted) target *= Rational(qp.q_integer());
  return convergence_run(samples, target, qp, levels);
}

NormReport norm_diagnostic(const std::function<PadicInt(long)>& f, int level,
                           const QPoint& qp) {
  const long p = qp.prime();
  const long total = checked_point_count(p, level, kNormGridBudget);
  RiemannSum s = riemann_sum(f, level, qp);

  NormReport rep;
  rep.integral_exponent = s.loss - s.numerator.valuation();

  std::vector<PadicInt> vals;
  vals.reserve(static_cast<size_t>(total));
  for (long x = 0; x < total; ++x) vals.push_back(f(x));
  int bound = -vals[0].valuation();
  for (long x = 1; x < total; ++x) {
    for (long y = 0; y < x; ++y) {
      const PadicInt diff =
          vals[static_cast<size_t>(x)] - vals[static_cast<size_t>(y)];
      bound = std::max(bound, long_valuation(x - y, p) - diff.valuation());
    }
  }
  rep.bound_exponent = bound;
  rep.holds = rep.integral_exponent <= 1 + rep.bound_exponent;
  rep.verdict = rep.holds
                    ? "holds"
                    : "inconclusive - grid bound is a lower bound on the "
                      "true norm";
  return rep;
}

PadicInt q_gamma(long n, const QPoint& qp) {
  if (n < 1) throw std::domain_error("gamma argument must be a positive integer");
  const long p = qp.prime();
  const int m = qp.precision();
  const Int& mod = qp.q().modulus();
  Int prod = 1;
  Int qj = 1;      // q^j
  Int bracket = 0; // [j]_q = 1 + q + ... + q^(j-1)
  for (long j = 1; j < n; ++j) {
    bracket += qj;
    mpz_mod(bracket.get_mpz_t(), bracket.get_mpz_t(), mod.get_mpz_t());
    qj *= qp.q().residue();
    mpz_mod(qj.get_mpz_t(), qj.get_mpz_t(), mod.get_mpz_t());
    if (j % p != 0) {
      prod *= bracket;
      mpz_mod(prod.get_mpz_t(), prod.get_mpz_t(), mod.get_mpz_t());
    }
  }
  if (n % 2 != 0) prod = -prod;
  return PadicInt(p, m, prod);
}

bool gamma_functional_check(long x, const QPoint& qp) {
  if (x < 1) throw std::domain_error("gamma argument must be a positive integer");
  const long p = qp.prime();
  const int m = qp.precision();
  PadicInt multiplier(p, m, Int(-1));
  if (x % p != 0) {
    // E(x) = -[x]_q for x coprime to p.
    Int bracket = 0, qj = 1;
    const Int& mod = qp.q().modulus();
    for (long j = 0; j < x; ++j) {
      bracket += qj;
      qj *= qp.q().residue();
      mpz_mod(qj.get_mpz_t(), qj.get_mpz_t(), mod.get_mpz_t());
    }
    multiplier = PadicInt(p, m, -bracket);
  }
  return q_gamma(x + 1, qp) == multiplier * q_gamma(x, qp);
}

// ---- registry-facing wrappers ------------------------------------------------

IdentityResult measure_normalization_check(const QPoint& qp, int levels) {
  ParamMap params{{"levels", levels}};
  auto f = [&](long) { return PadicInt(qp.prime(), qp.precision(), Int(1)); };
  const PadicInt one(qp.prime(), qp.precision(), Int(1));
  for (int n = 1; n <= levels; ++n) {
    const RiemannSum s = riemann_sum(f, n, qp);
    const bool ok = s.value.has_value() && *s.value == one;
    if (!ok) {
      IdentityResult r = make_result("padic-measure", "as-printed",
                                     params, false, "constant integrand");
      r.lhs = s.value ? s.value->str() : "undefined quotient";
      r.rhs = "1";
      r.note = "level " + std::to_string(n);
      return r;
    }
  }
  return make_result("padic-measure", "as-printed", params, true,
                     "constant integrand");
}

IdentityResult beta_convergence_check(int n, const QPoint& qp, int levels) {
  ParamMap params{{"n", n}, {"levels", levels}};
  const ConvergenceReport rep = beta_padic(n, qp, levels);
  IdentityResult r = make_result("padic-beta", "as-printed", params,
                                 rep.witness,
                                 "error valuations " + valuations_str(rep.errors));
  if (!rep.witness) {
    r.lhs = valuations_str(rep.errors);
    r.rhs = "strictly increasing from level 2";
  }
  return r;
}

IdentityResult qbinom_oracle_check(int n, const QPoint& qp, int levels,
                                   Variant variant) {
  ParamMap params{{"n", n}, {"levels", levels}};
  const ConvergenceReport rep = qbinom_integral_padic(n, qp, levels, variant);
  const std::string lane = variant == Variant::Corrected
                               ? "padic-oracle"
                               : "padic-oracle-printed";
  IdentityResult r = make_result("eq20", lane, params, rep.witness,
                                 "error valuations " +
                                     valuations_str(rep.errors));
  if (!rep.witness) {
    r.lhs = valuations_str(rep.errors);
    r.rhs = "strictly increasing from level 2";
  }
  return r;
}

IdentityResult gamma_equation_check(const QPoint& qp, int x_max) {
  ParamMap params{{"p", static_cast<int>(qp.prime())},
                  {"q", static_cast<int>(qp.q_integer())},
                  {"xmax", x_max}};
  for (long x = 1; x <= x_max; ++x) {
    if (!gamma_functional_check(x, qp)) {
      IdentityResult r = make_result("gamma", "as-printed", params,
                                     false, "functional equation");
      r.note = "fails at x = " + std::to_string(x);
      return r;
    }
  }
  return make_result("gamma", "as-printed", params, true,
                     "functional equation");
}

IdentityResult norm_diagnostic_check(int power, int level, const QPoint& qp) {
  ParamMap params{{"power", power}, {"level", level}};
  const long total = checked_point_count(qp.prime(), level, kNormGridBudget);
  std::vector<Int> samples = qint_samples(qp, total);
  const Int& mod = qp.q().modulus();
  for (auto& v : samples) v = powmod(v, Int(power), mod);
  auto f = [&](long x) {
    return PadicInt(qp.prime(), qp.precision(),
                    samples[static_cast<size_t>(x)]);
  };
  const NormReport rep = norm_diagnostic(f, level, qp);
  IdentityResult r = make_result("norm", "as-printed", params,
                                 rep.holds, rep.verdict);
  if (!rep.holds) {
    r.lhs = "p^" + std::to_string(rep.integral_exponent);
    r.rhs = "p * p^" + std::to_string(rep.bound_exponent);
  }
  return r;
}

}  // namespace qbw
