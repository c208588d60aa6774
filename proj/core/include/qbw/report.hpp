#pragma once

#include "qbw/registry.hpp"

#include <string>

namespace qbw {

/// Rendering options for the machine-readable report.
struct ReportOptions {
  /// Emit a generated_at field (suppress for byte-stable output).
  bool include_timestamp = true;
  /// Echo of the lane selection, "all" or a comma-joined id list.
  std::string selection = "all";
  /// Echo of the range cap handed to run_suite (0 = lane defaults).
  int max_n = 0;
};

/// JSON document (schema "qbw-report/1") for a suite run.  Output is
/// byte-stable for a given report when the timestamp is suppressed.
std::string report_json(const SuiteReport& report,
                        const ReportOptions& options = {});

/// Human-oriented summary: one line per lane plus witness lines for
/// failures and counterexamples, and a closing verdict line.
std::string report_text(const SuiteReport& report);

}  // namespace qbw
