#include "qbw/bernoulli.hpp"
#include "qbw/padic.hpp"
#include "qbw/registry.hpp"
#include "qbw/report.hpp"
#include "qbw/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_ids(const std::string& suite) {
  std::vector<std::string> ids;
  std::stringstream ss(suite);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty())
      throw std::invalid_argument("empty id in --suite list '" + suite + "'");
    ids.push_back(id);
  }
  if (ids.empty())
    throw std::invalid_argument("--suite needs 'all' or a comma-separated "
                                "list of identity ids");
  return ids;
}

bool write_output(const std::string& path, const std::string& content,
                  std::string& error) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    error = "cannot open '" + path + "' for writing";
    return false;
  }
  out << content;
  return true;
}

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 0;
  int jobs = 1;
  std::string report_path;
  std::string format = "text";
  bool no_timestamp = false;
};

int run_verify(const VerifyOptions& o) {
  const qbw::SuiteReport report =
      o.suite == "all"
          ? qbw::run_full_suite(o.max_n, o.jobs)
          : qbw::run_suite(split_ids(o.suite), o.max_n, o.jobs);

  qbw::ReportOptions ropt;
  ropt.include_timestamp = !o.no_timestamp;
  ropt.selection = o.suite;
  ropt.max_n = o.max_n;

  if (!o.report_path.empty()) {
    std::string error;
    if (!write_output(o.report_path, qbw::report_json(report, ropt), error)) {
      std::cerr << "error: " << error << '\n';
      return 2;
    }
  }
  if (o.format == "json") {
    std::cout << qbw::report_json(report, ropt);
  } else {
    std::cout << qbw::report_text(report);
  }
  return report.exit_code();
}

struct TableOptions {
  std::string kind;
  int max_n = 8;
  std::string format = "json";
  std::string out;
};

int run_table(const TableOptions& o) {
  const std::string content = qbw::emit_table(
      qbw::parse_table_kind(o.kind), o.max_n, qbw::parse_table_format(o.format));
  std::string error;
  if (!write_output(o.out, content, error)) {
    std::cerr << "error: " << error << '\n';
    return 2;
  }
  return 0;
}

struct PadicOptions {
  long p = 0;
  int precision = 25;
  long q = 0;
  int n = 0;
  int levels = 5;
  std::string target = "beta";
};

int run_padic(const PadicOptions& o) {
  const qbw::QPoint qp(o.p, o.precision, o.q);
  qbw::ConvergenceReport rep;
  if (o.target == "beta") {
    rep = qbw::beta_padic(o.n, qp, o.levels);
  } else if (o.target == "geometric") {
    rep = qbw::geometric_integral_padic(o.n, qp, o.levels);
  } else if (o.target == "qbinom") {
    rep = qbw::qbinom_integral_padic(o.n, qp, o.levels,
                                     qbw::Variant::Corrected);
  } else if (o.target == "qbinom-printed") {
    rep = qbw::qbinom_integral_padic(o.n, qp, o.levels,
                                     qbw::Variant::AsPrinted);
  } else {
    throw std::invalid_argument("unknown --target '" + o.target +
                                "'; expected beta, geometric, qbinom or "
                                "qbinom-printed");
  }

  Json doc;
  doc["schema"] = "qbw-padic/1";
  doc["p"] = o.p;
  doc["precision"] = o.precision;
  doc["q"] = o.q;
  doc["n"] = o.n;
  doc["levels"] = o.levels;
  doc["target_kind"] = o.target;
  doc["target"] = qbw::to_string(rep.target);
  Json levels = Json::array();
  for (size_t i = 0; i < rep.sums.size(); ++i) {
    const qbw::RiemannSum& s = rep.sums[i];
    Json j;
    j["level"] = s.level;
    j["loss"] = s.loss;
    j["numerator"] = s.numerator.str();
    j["denominator"] = s.denominator.str();
    if (s.value) {
      j["value"] = s.value->str();
      j["value_precision"] = s.value->precision();
    } else {
      j["value"] = nullptr;
    }
    if (i < rep.errors.size()) {
      j["error_valuation"] = rep.errors[i].valuation;
      j["error_exact"] = rep.errors[i].exact;
    }
    levels.push_back(std::move(j));
  }
  doc["levels_detail"] = std::move(levels);
  doc["strictly_increasing"] = rep.witness;
  std::cout << doc.dump(2) << '\n';
  return 0;
}

struct ExpandOptions {
  std::string target;
  int m = 0;
  int order = 20;
};

int run_expand(const ExpandOptions& o) {
  qbw::SeriesPair pair = [&] {
    if (o.target == "lemma1") {
      const qbw::BernoulliTable betas(o.m);
      return qbw::gf_series_pair(o.m, o.order, betas);
    }
    if (o.target == "eq7") return qbw::gf_poly_series_pair(o.m, o.order);
    throw std::invalid_argument("unknown --target '" + o.target +
                                "'; expected lemma1 or eq7");
  }();

  Json doc;
  doc["schema"] = "qbw-expand/1";
  doc["target"] = o.target;
  doc["m"] = o.m;
  doc["order"] = o.order;
  Json lhs = Json::array();
  Json rhs = Json::array();
  bool equal = true;
  for (int j = 0; j <= o.order; ++j) {
    lhs.push_back(pair.lhs.coefficient(j).str());
    rhs.push_back(pair.rhs.coefficient(j).str());
    if (!(pair.lhs.coefficient(j) == pair.rhs.coefficient(j))) equal = false;
  }
  doc["lhs"] = std::move(lhs);
  doc["rhs"] = std::move(rhs);
  doc["equal"] = equal;
  std::cout << doc.dump(2) << '\n';
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qbw: exact workbench for q-deformed Bernoulli and Stirling "
               "identities"};
  app.require_subcommand(1);

  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the identity verification suite");
  verify->add_option("--suite", vo.suite,
                     "'all' or comma-separated identity ids (e.g. "
                     "eq13,thm8)")
      ->capture_default_str();
  verify->add_option("--max-n", vo.max_n,
                     "cap instance ranges at this size (0 = lane defaults)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", vo.jobs, "worker threads for lane execution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--report", vo.report_path,
                     "write the JSON report to this file");
  verify->add_option("--format", vo.format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_flag("--no-timestamp", vo.no_timestamp,
                   "omit generated_at for byte-stable output");

  TableOptions to;
  CLI::App* table =
      app.add_subcommand("table", "Emit a number or triangle table");
  table->add_option("--kind", to.kind, "beta | s1 | s2 | qbinom")->required();
  table->add_option("--max-n", to.max_n, "largest row index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  table->add_option("--format", to.format, "json | csv | latex")
      ->capture_default_str();
  table->add_option("--out", to.out, "output file (default stdout)");

  PadicOptions po;
  CLI::App* padic = app.add_subcommand(
      "padic", "p-adic Riemann sums against the exact rational target");
  padic->add_option("--p", po.p, "odd prime base")->required();
  padic->add_option("--precision", po.precision, "working precision p^M")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  padic->add_option("--q", po.q, "integer q with v_p(q-1) >= 1")->required();
  padic->add_option("--n", po.n, "index of the target value")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  padic->add_option("--levels", po.levels, "finest level N (sums over p^N points)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  padic->add_option("--target", po.target,
                    "beta | geometric | qbinom | qbinom-printed")
      ->capture_default_str();

  ExpandOptions eo;
  CLI::App* expand = app.add_subcommand(
      "expand", "Print both sides of a series comparison");
  expand->add_option("--target", eo.target, "lemma1 | eq7")->required();
  expand->add_option("--m", eo.m, "index of the expanded value")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  expand->add_option("--order", eo.order, "truncation order in q")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(vo);
    if (table->parsed()) return run_table(to);
    if (padic->parsed()) return run_padic(po);
    if (expand->parsed()) return run_expand(eo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
