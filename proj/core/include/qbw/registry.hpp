#pragma once

#include "qbw/bernoulli.hpp"
#include "qbw/identity.hpp"
#include "qbw/padic.hpp"
#include "qbw/stirling.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qbw {

/// What a verification lane is supposed to demonstrate.
enum class Expectation {
  /// Every enumerated instance must hold.
  MustPass,
  /// At least one enumerated instance must fail; the failing instances
  /// are the deliverable (they witness that this reading is wrong).
  ExpectCounterexample,
  /// Informational only; never gates the suite.
  Diagnostic,
};

std::string to_string(Expectation e);

/// Shared immutable context built once per suite run: the number and
/// triangle tables every check draws from, plus the p-adic base point.
class Workbench {
 public:
  Workbench();

  const BernoulliTable& betas() const { return betas_; }
  const StirlingTable& s1() const { return s1_; }
  const StirlingTable& s2() const { return s2_; }
  const QPoint& qpoint() const { return qpoint_; }

 private:
  BernoulliTable betas_;
  StirlingTable s1_;
  StirlingTable s2_;
  QPoint qpoint_;
};

/// One verification lane: a (identity id, variant) pair together with
/// its expectation and the instances enumerated for it.
struct Lane {
  std::string id;
  std::string variant;
  Expectation expectation;
  std::string summary;
  /// Enumerates the lane's instances.  max_n > 0 caps the instance
  /// ranges; 0 uses the lane defaults.
  std::function<std::vector<IdentityResult>(const Workbench&, int max_n)> run;
};

/// Aggregated outcome of one lane.
struct LaneOutcome {
  std::string id;
  std::string variant;
  Expectation expectation;
  std::string summary;
  int cells = 0;
  int failures = 0;  // instances where the two sides differ
  bool ok = false;   // the lane's expectation was met
  /// Failing instances with their witness strings.
  std::vector<IdentityResult> witnesses;
  /// Passing instances that carry a non-empty note (e.g. valuation
  /// profiles or sub-case labels), kept for the report.
  std::vector<IdentityResult> notes;
};

/// Deterministic result of a suite run; lanes sorted by (id, variant).
struct SuiteReport {
  std::vector<LaneOutcome> lanes;
  int must_pass_lanes = 0;
  int counterexample_lanes = 0;
  int diagnostic_lanes = 0;
  int failed_lanes = 0;  // gating lanes whose expectation was not met
  bool all_ok = false;

  int exit_code() const { return all_ok ? 0 : 1; }
};

/// The full lane table, sorted by (id, variant).
const std::vector<Lane>& registry();

/// All distinct identity ids, sorted.
std::vector<std::string> registry_ids();

/// True if some lane carries this identity id.
bool registry_has_id(const std::string& id);

/// Runs the lanes carrying the selected identity ids; an empty
/// selection runs nothing and yields an empty, passing report.
/// max_n > 0 caps instance ranges.  jobs > 1 distributes lanes across
/// worker threads; output is deterministic regardless of jobs.
/// Throws std::invalid_argument for an unknown id.
SuiteReport run_suite(const std::vector<std::string>& ids, int max_n = 0,
                      int jobs = 1);

/// Runs every lane in the registry.
SuiteReport run_full_suite(int max_n = 0, int jobs = 1);

}  // namespace qbw
