#include "qbw/registry.hpp"

#include "qbw/qcore.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

namespace qbw {

namespace {

constexpr int kBetaRows = 12;
constexpr int kStirlingRows = 10;
constexpr long kPrime = 5;
constexpr int kPrecision = 25;
constexpr long kQInteger = 6;
constexpr int kLevels = 5;

/// Caps a default range end when the caller asked for a smaller one.
int cap(int def, int max_n) {
  return max_n > 0 ? std::min(def, max_n) : def;
}

using Cells = std::vector<IdentityResult>;
using RunFn = std::function<Cells(const Workbench&, int)>;

/// Enumerates n = lo..hi(capped) through a single-parameter check.
RunFn over_n(int lo, int hi, std::function<IdentityResult(const Workbench&, int)> f) {
  return [lo, hi, f = std::move(f)](const Workbench& wb, int max_n) {
    Cells out;
    for (int n = lo; n <= cap(hi, max_n); ++n) out.push_back(f(wb, n));
    return out;
  };
}

std::vector<Lane> build_registry() {
  std::vector<Lane> lanes;
  auto add = [&lanes](std::string id, std::string variant, Expectation e,
                      std::string summary, RunFn run) {
    lanes.push_back(Lane{std::move(id), std::move(variant), e,
                         std::move(summary), std::move(run)});
  };

  // ----------------------------------------------------------- q-core
  add("eq19", "corrected", Expectation::MustPass,
      "row-n Pascal rules for Gaussian binomials with power factors q^n "
      "and q^{x+1-n}",
      over_n(1, 8, [](const Workbench&, int n) {
        return pascal_check(n, Variant::Corrected);
      }));
  add("eq19", "as-printed", Expectation::ExpectCounterexample,
      "Pascal rules with the power factors printed as q^x and q^{x-n}",
      over_n(1, 5, [](const Workbench&, int n) {
        return pascal_check(n, Variant::AsPrinted);
      }));

  add("eq13", "corrected", Expectation::MustPass,
      "finite product prod (1 + b q^{i-1}) expanded with exponent C(k,2)",
      over_n(0, 8, [](const Workbench&, int n) {
        return gauss_product_check(n, Variant::Corrected);
      }));
  add("eq13", "as-printed", Expectation::ExpectCounterexample,
      "finite product expanded with the printed exponent binomial(n,k)",
      over_n(0, 5, [](const Workbench&, int n) {
        return gauss_product_check(n, Variant::AsPrinted);
      }));
  add("eq13", "inverse-series", Expectation::MustPass,
      "inverse product prod (1 - b q^{i-1})^{-1} has series coefficients "
      "[n+k-1, k]",
      over_n(0, 4, [](const Workbench&, int n) {
        return inverse_gauss_check(n, 5);
      }));

  add("unit-sum", "as-printed", Expectation::MustPass,
      "alternating column sum sum_k (-1)^{k+1} q^{C(k,2)} [n,k] equals 1",
      over_n(1, 8, [](const Workbench&, int n) {
        return alternating_unit_sum_check(n);
      }));

  add("eq23", "as-printed", Expectation::MustPass,
      "Gaussian binomial as a sum of q-weights over compositions",
      [](const Workbench&, int max_n) {
        Cells out;
        for (int n = 0; n <= cap(10, max_n); ++n)
          for (int k = 0; k <= n; ++k)
            out.push_back(composition_binomial_check(n, k));
        return out;
      });

  // ------------------------------------------------------- q-Stirling
  add("eq14", "as-printed", Expectation::MustPass,
      "falling factorial expanded in powers of [x] through the first "
      "triangle",
      over_n(0, kStirlingRows, [](const Workbench& wb, int n) {
        return power_basis_check(n, wb.s1());
      }));
  add("eq14", "matrix-inverse", Expectation::MustPass,
      "the two twisted triangles are mutually inverse matrices",
      [](const Workbench& wb, int max_n) {
        return Cells{matrix_inverse_check(cap(kStirlingRows, max_n), wb.s1(),
                                          wb.s2())};
      });
  add("eq15", "as-printed", Expectation::MustPass,
      "powers of [x] expanded in falling factorials through the second "
      "triangle",
      over_n(0, kStirlingRows, [](const Workbench& wb, int n) {
        return falling_basis_check(n, wb.s2());
      }));

  add("thm3", "corrected", Expectation::MustPass,
      "alternating binomial-harmonic sum equals sum_k q^k/[k]",
      over_n(1, 12, [](const Workbench&, int n) {
        return theorem3_check(n, Variant::Corrected);
      }));
  add("thm3", "as-printed", Expectation::ExpectCounterexample,
      "alternating binomial-harmonic sum against the printed sum_k q^n/[k]",
      over_n(1, 5, [](const Workbench&, int n) {
        return theorem3_check(n, Variant::AsPrinted);
      }));
  add("thm3", "telescope", Expectation::MustPass,
      "successive alternating sums differ by exactly q^n/[n]",
      over_n(1, 8, [](const Workbench&, int n) {
        return harmonic_telescope_check(n);
      }));
  add("thm3", "double-sum", Expectation::MustPass,
      "double-sum rearrangement of the alternating binomial-harmonic sum",
      over_n(1, 8, [](const Workbench&, int n) {
        return harmonic_double_sum_check(n);
      }));

  add("s1-closed", "as-printed", Expectation::MustPass,
      "closed forms of the first-triangle columns k = 1 and k = 2",
      over_n(2, 8, [](const Workbench& wb, int n) {
        return s1_closed_form_check(n, wb.s1());
      }));

  // ------------------------------------------------------ q-Bernoulli
  add("eq1", "as-printed", Expectation::MustPass,
      "closed form of the numbers solves the umbral recurrence",
      [](const Workbench& wb, int max_n) {
        return Cells{beta_recurrence_check(cap(kBetaRows, max_n), wb.betas())};
      });

  add("eq4-5", "as-printed", Expectation::MustPass,
      "polynomial closed form matches the umbral moment form; boundary "
      "values pinned",
      over_n(0, 8, [](const Workbench& wb, int n) {
        return beta_poly_moment_check(n, wb.betas());
      }));

  add("lemma1", "as-printed", Expectation::MustPass,
      "q-expansion of the numbers matches the truncated double series",
      [](const Workbench& wb, int max_n) {
        Cells out;
        for (int m = 0; m <= cap(8, max_n); ++m)
          out.push_back(gf_coefficient_check(m, 30, wb.betas()));
        return out;
      });
  add("eq7", "as-printed", Expectation::MustPass,
      "q-expansion of the polynomials matches the truncated double series",
      [](const Workbench&, int max_n) {
        Cells out;
        for (int m = 0; m <= cap(5, max_n); ++m)
          out.push_back(gf_poly_coefficient_check(m, 20));
        return out;
      });

  add("eq11", "corrected", Expectation::MustPass,
      "integer-shift difference with the q^n weight and the (q-1) term",
      [](const Workbench& wb, int max_n) {
        Cells out;
        for (int m = 0; m <= cap(6, max_n); ++m)
          for (int n = 1; n <= cap(5, max_n); ++n)
            out.push_back(sum_formula_check(m, n, Variant::Corrected, wb.betas()));
        return out;
      });
  add("eq11", "as-printed", Expectation::ExpectCounterexample,
      "integer-shift difference as printed, without weight or (q-1) term",
      [](const Workbench& wb, int max_n) {
        Cells out;
        for (int m = 1; m <= cap(4, max_n); ++m)
          for (int n = 1; n <= cap(4, max_n); ++n)
            out.push_back(sum_formula_check(m, n, Variant::AsPrinted, wb.betas()));
        return out;
      });

  add("prop2", "as-printed", Expectation::ExpectCounterexample,
      "power-sum rearrangement as printed",
      [](const Workbench& wb, int max_n) {
        Cells out;
        for (int m = 1; m <= cap(4, max_n); ++m)
          for (int n = 1; n <= cap(4, max_n); ++n)
            out.push_back(proposition2_check(m, n, wb.betas()));
        return out;
      });

  add("eq8", "as-printed", Expectation::MustPass,
      "multiplication formula, symbolic in x",
      [](const Workbench&, int max_n) {
        Cells out;
        for (int m = 1; m <= cap(3, max_n); ++m)
          for (int k = 0; k <= cap(6, max_n); ++k)
            out.push_back(multiplication_check(m, k));
        return out;
      });
  add("eq8-x0", "corrected", Expectation::MustPass,
      "multiplication formula at x = 0 with matching indices",
      [](const Workbench& wb, int max_n) {
        Cells out;
        for (int m = 1; m <= cap(4, max_n); ++m)
          for (int n = 1; n <= cap(4, max_n); ++n)
            out.push_back(
                multiplication_x0_check(m, n, Variant::Corrected, wb.betas()));
        return out;
      });
  add("eq8-x0", "as-printed", Expectation::ExpectCounterexample,
      "multiplication formula at x = 0 with the printed mixed indices",
      [](const Workbench& wb, int max_n) {
        Cells out;
        for (int m = 1; m <= cap(4, max_n); ++m)
          for (int n = m; n <= cap(4, max_n); ++n)
            out.push_back(
                multiplication_x0_check(m, n, Variant::AsPrinted, wb.betas()));
        return out;
      });

  add("eq17-18", "as-printed", Expectation::MustPass,
      "two expansions of the functional on q^{nx} agree with the closed "
      "value",
      over_n(0, kStirlingRows, [](const Workbench& wb, int n) {
        return qpow_expansion_check(n, wb.s1(), wb.betas());
      }));

  add("thm5", "as-printed", Expectation::MustPass,
      "binomial coefficients recovered from the twisted first triangle",
      [](const Workbench& wb, int max_n) {
        Cells out;
        for (int n = 0; n <= cap(kStirlingRows, max_n); ++n)
          for (int m = 0; m <= n; ++m)
            out.push_back(theorem5_check(n, m, wb.s1()));
        return out;
      });
  add("thm4", "as-printed", Expectation::MustPass,
      "numbers reproduced through the triple first-triangle sum",
      over_n(0, 8, [](const Workbench& wb, int n) {
        return theorem4_check(n, wb.s1(), wb.betas());
      }));
  add("thm6", "as-printed", Expectation::MustPass,
      "numbers reproduced after swapping the summation order",
      over_n(0, 8, [](const Workbench& wb, int n) {
        return theorem6_check(n, wb.s1(), wb.betas());
      }));

  add("thm8", "corrected", Expectation::MustPass,
      "composition-sum route to the numbers with sign (-1)^k",
      over_n(0, 8, [](const Workbench& wb, int n) {
        return theorem8_check(n, Variant::Corrected, wb.s1(), wb.betas());
      }));
  add("thm8", "as-printed", Expectation::ExpectCounterexample,
      "composition-sum route with the printed sign (-1)^{n-m}",
      over_n(0, 4, [](const Workbench& wb, int n) {
        return theorem8_check(n, Variant::AsPrinted, wb.s1(), wb.betas());
      }));

  add("eq20", "corrected", Expectation::MustPass,
      "functional on [x choose n] equals (-1)^n q^{-C(n,2)} / [n+1]",
      over_n(0, 8, [](const Workbench&, int n) {
        return binom_integral_check(n, Variant::Corrected);
      }));
  add("eq20", "as-printed", Expectation::ExpectCounterexample,
      "functional on [x choose n] with the printed extra power of q",
      over_n(0, 4, [](const Workbench&, int n) {
        return binom_integral_check(n, Variant::AsPrinted);
      }));
  add("eq20", "padic-oracle", Expectation::MustPass,
      "p-adic Riemann sums converge to the corrected value at p=5, q=6",
      over_n(0, 4, [](const Workbench& wb, int n) {
        return qbinom_oracle_check(n, wb.qpoint(), kLevels, Variant::Corrected);
      }));
  add("eq20", "padic-oracle-printed", Expectation::ExpectCounterexample,
      "p-adic Riemann sums do not converge to the printed value",
      over_n(0, 4, [](const Workbench& wb, int n) {
        return qbinom_oracle_check(n, wb.qpoint(), kLevels, Variant::AsPrinted);
      }));

  add("eq21", "as-printed", Expectation::MustPass,
      "functional on the falling factorial via the first triangle",
      over_n(0, 8, [](const Workbench& wb, int n) {
        return stirling_integral_check(n, wb.s1(), wb.betas());
      }));

  add("eq22", "corrected", Expectation::MustPass,
      "first-triangle pairing with the numbers equals (-1)^n [n]!/[n+1]",
      over_n(0, 8, [](const Workbench& wb, int n) {
        return s1_beta_sum_check(n, Variant::Corrected, wb.s1(), wb.betas());
      }));
  add("eq22", "as-printed", Expectation::ExpectCounterexample,
      "first-triangle pairing with the printed extra factor q",
      over_n(0, 1, [](const Workbench& wb, int n) {
        return s1_beta_sum_check(n, Variant::AsPrinted, wb.s1(), wb.betas());
      }));

  add("thm7", "corrected", Expectation::MustPass,
      "numbers recovered from the second triangle",
      over_n(0, 8, [](const Workbench& wb, int n) {
        return theorem7_check(n, Variant::Corrected, wb.s2(), wb.betas());
      }));
  add("thm7", "as-printed", Expectation::ExpectCounterexample,
      "second-triangle recovery with the printed extra factor q",
      over_n(0, 1, [](const Workbench& wb, int n) {
        return theorem7_check(n, Variant::AsPrinted, wb.s2(), wb.betas());
      }));

  add("classical-limit", "as-printed", Expectation::MustPass,
      "q -> 1 limits agree with the classical Bernoulli numbers",
      [](const Workbench& wb, int max_n) {
        return Cells{classical_limit_check(cap(kBetaRows, max_n), wb.betas())};
      });

  // ----------------------------------------------------------- p-adic
  add("padic-measure", "as-printed", Expectation::MustPass,
      "Riemann sums of the constant 1 equal 1 at every level",
      [](const Workbench& wb, int max_n) {
        return Cells{
            measure_normalization_check(wb.qpoint(), cap(kLevels, max_n))};
      });
  add("padic-beta", "as-printed", Expectation::MustPass,
      "Riemann sums converge p-adically to the numbers at p=5, q=6",
      over_n(0, 6, [](const Workbench& wb, int n) {
        return beta_convergence_check(n, wb.qpoint(), kLevels);
      }));

  add("gamma", "as-printed", Expectation::MustPass,
      "q-gamma functional equation at two base points",
      [](const Workbench& wb, int max_n) {
        const int xmax = cap(30, max_n);
        Cells out;
        out.push_back(gamma_equation_check(wb.qpoint(), xmax));
        out.push_back(
            gamma_equation_check(QPoint(7, kPrecision, 8), xmax));
        return out;
      });

  add("norm", "as-printed", Expectation::Diagnostic,
      "grid lower bound for the sup-norm comparison of integral and "
      "integrand",
      [](const Workbench& wb, int max_n) {
        const int level = cap(4, max_n);
        Cells out;
        for (int power : {0, 1, 3})
          out.push_back(norm_diagnostic_check(power, level, wb.qpoint()));
        return out;
      });

  std::sort(lanes.begin(), lanes.end(), [](const Lane& a, const Lane& b) {
    return std::tie(a.id, a.variant) < std::tie(b.id, b.variant);
  });
  return lanes;
}

LaneOutcome run_lane(const Lane& lane, const Workbench& wb, int max_n) {
  LaneOutcome out;
  out.id = lane.id;
  out.variant = lane.variant;
  out.expectation = lane.expectation;
  out.summary = lane.summary;
  const Cells cells = lane.run(wb, max_n);
  out.cells = static_cast<int>(cells.size());
  for (const IdentityResult& r : cells) {
    if (!r.equal) {
      ++out.failures;
      out.witnesses.push_back(r);
    } else if (!r.note.empty()) {
      out.notes.push_back(r);
    }
  }
  switch (lane.expectation) {
    case Expectation::MustPass:
      out.ok = out.cells > 0 && out.failures == 0;
      break;
    case Expectation::ExpectCounterexample:
      out.ok = out.failures > 0;
      break;
    case Expectation::Diagnostic:
      out.ok = true;
      break;
  }
  return out;
}

}  // namespace

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::MustPass:
      return "must-pass";
    case Expectation::ExpectCounterexample:
      return "expect-counterexample";
    case Expectation::Diagnostic:
      return "diagnostic";
  }
  return "unknown";
}

Workbench::Workbench()
    : betas_(kBetaRows),
      s1_(StirlingTable::first(kStirlingRows)),
      s2_(StirlingTable::second(kStirlingRows)),
      qpoint_(kPrime, kPrecision, kQInteger) {}

const std::vector<Lane>& registry() {
  static const std::vector<Lane> lanes = build_registry();
  return lanes;
}

std::vector<std::string> registry_ids() {
  std::set<std::string> ids;
  for (const Lane& lane : registry()) ids.insert(lane.id);
  return {ids.begin(), ids.end()};
}

bool registry_has_id(const std::string& id) {
  for (const Lane& lane : registry())
    if (lane.id == id) return true;
  return false;
}

SuiteReport run_suite(const std::vector<std::string>& ids, int max_n,
                      int jobs) {
  for (const std::string& id : ids) {
    if (!registry_has_id(id)) {
      std::string known;
      for (const std::string& k : registry_ids()) {
        if (!known.empty()) known += ", ";
        known += k;
      }
      throw std::invalid_argument("unknown identity id '" + id +
                                  "'; known ids: " + known);
    }
  }

  std::vector<const Lane*> selected;
  for (const Lane& lane : registry()) {
    if (std::find(ids.begin(), ids.end(), lane.id) != ids.end()) {
      selected.push_back(&lane);
    }
  }

  const Workbench wb;
  std::vector<LaneOutcome> outcomes(selected.size());

  const int workers = std::max(
      1, std::min<int>(jobs, static_cast<int>(selected.size())));
  if (workers <= 1) {
    for (size_t i = 0; i < selected.size(); ++i)
      outcomes[i] = run_lane(*selected[i], wb, max_n);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= selected.size()) return;
          try {
            outcomes[i] = run_lane(*selected[i], wb, max_n);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  SuiteReport report;
  report.lanes = std::move(outcomes);
  for (const LaneOutcome& lane : report.lanes) {
    switch (lane.expectation) {
      case Expectation::MustPass:
        ++report.must_pass_lanes;
        break;
      case Expectation::ExpectCounterexample:
        ++report.counterexample_lanes;
        break;
      case Expectation::Diagnostic:
        ++report.diagnostic_lanes;
        break;
    }
    if (!lane.ok && lane.expectation != Expectation::Diagnostic)
      ++report.failed_lanes;
  }
  report.all_ok = report.failed_lanes == 0;
  return report;
}

SuiteReport run_full_suite(int max_n, int jobs) {
  return run_suite(registry_ids(), max_n, jobs);
}

}  // namespace qbw
