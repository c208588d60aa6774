#include "qbw/report.hpp"

#include "json.hpp"

#include <ctime>
#include <iomanip>
#include <sstream>

namespace qbw {

namespace {

using Json = nlohmann::ordered_json;

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json cell_json(const IdentityResult& r, bool with_witness) {
  Json j;
  j["params"] = params_str(r.params);
  if (with_witness) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (!r.difference.empty()) j["difference"] = r.difference;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string report_json(const SuiteReport& report,
                        const ReportOptions& options) {
  Json doc;
  doc["schema"] = "qbw-report/1";
  if (options.include_timestamp) doc["generated_at"] = utc_now();
  doc["selection"] = Json{{"ids", options.selection},
                          {"max_n", options.max_n}};
  doc["summary"] = Json{{"lanes", report.lanes.size()},
                        {"must_pass", report.must_pass_lanes},
                        {"expect_counterexample", report.counterexample_lanes},
                        {"diagnostic", report.diagnostic_lanes},
                        {"failed_lanes", report.failed_lanes},
                        {"all_ok", report.all_ok},
                        {"exit_code", report.exit_code()}};
  Json lanes = Json::array();
  for (const LaneOutcome& lane : report.lanes) {
    Json j;
    j["id"] = lane.id;
    j["variant"] = lane.variant;
    j["expectation"] = to_string(lane.expectation);
    j["summary"] = lane.summary;
    j["cells"] = lane.cells;
    j["failures"] = lane.failures;
    j["ok"] = lane.ok;
    if (!lane.witnesses.empty()) {
      Json w = Json::array();
      for (const IdentityResult& r : lane.witnesses)
        w.push_back(cell_json(r, /*with_witness=*/true));
      const char* key = lane.expectation == Expectation::ExpectCounterexample
                            ? "counterexamples"
                            : "failures_detail";
      j[key] = std::move(w);
    }
    if (!lane.notes.empty()) {
      Json n = Json::array();
      for (const IdentityResult& r : lane.notes)
        n.push_back(cell_json(r, /*with_witness=*/false));
      j["notes"] = std::move(n);
    }
    lanes.push_back(std::move(j));
  }
  doc["lanes"] = std::move(lanes);
  return doc.dump(2) + "\n";
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const LaneOutcome& lane : report.lanes) {
    const char* status =
        lane.expectation == Expectation::Diagnostic ? "info"
        : lane.ok                                   ? "ok"
                                                    : "FAIL";
    os << std::left << std::setw(5) << status << std::setw(17) << lane.id
       << std::setw(23) << lane.variant << std::setw(23)
       << to_string(lane.expectation) << std::right << std::setw(4)
       << lane.cells << " cell" << (lane.cells == 1 ? "" : "s");
    if (lane.failures > 0) os << ", " << lane.failures << " unequal";
    os << '\n';
    const bool expected = lane.expectation == Expectation::ExpectCounterexample;
    const char* label = expected ? "counterexample" : "mismatch";
    size_t shown = 0;
    for (const IdentityResult& r : lane.witnesses) {
      if (shown++ == 3) {
        os << "      ... " << (lane.witnesses.size() - 3) << " more\n";
        break;
      }
      os << "      " << label << " at " << params_str(r.params) << ": "
         << r.lhs << "  vs  " << r.rhs << '\n';
    }
    if (lane.expectation == Expectation::Diagnostic) {
      for (const IdentityResult& r : lane.notes)
        os << "      " << params_str(r.params) << ": " << r.note << '\n';
    }
  }
  os << "lanes: " << report.lanes.size() << " (" << report.must_pass_lanes
     << " must-pass, " << report.counterexample_lanes
     << " expect-counterexample, " << report.diagnostic_lanes
     << " diagnostic), failed: " << report.failed_lanes << '\n'
     << "suite: " << (report.all_ok ? "OK" : "FAIL") << '\n';
  return os.str();
}

}  // namespace qbw
