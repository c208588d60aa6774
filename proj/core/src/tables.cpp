#include "qbw/tables.hpp"

#include "qbw/bernoulli.hpp"
#include "qbw/qcore.hpp"
#include "qbw/stirling.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qbw {

namespace {

using Json = nlohmann::ordered_json;

// ----------------------------------------------------------- LaTeX

std::string latex_rational(const Rational& c) {
  const Int num = c.get_num();
  const Int den = c.get_den();
  if (den == 1) return num.get_str();
  const std::string sign = num < 0 ? "-" : "";
  const Int abs_num = abs(num);
  return sign + "\\frac{" + abs_num.get_str() + "}{" + den.get_str() + "}";
}

std::string latex_monomial(const Monomial& m) {
  std::string out;
  if (m.q_exp == 1) {
    out += "q";
  } else if (m.q_exp > 1) {
    out += "q^{" + std::to_string(m.q_exp) + "}";
  }
  if (m.u_exp == 1) {
    out += "u";
  } else if (m.u_exp > 1) {
    out += "u^{" + std::to_string(m.u_exp) + "}";
  }
  return out;
}

std::string latex_poly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool negative = sign(coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    const std::string vars = latex_monomial(mono);
    if (vars.empty()) {
      out += latex_rational(mag);
    } else {
      if (mag != 1) out += latex_rational(mag);
      out += vars;
    }
  }
  return out;
}

std::string latex_ratfunc(const RatFunc& f) {
  if (f.is_polynomial()) return latex_poly(f.num());
  return "\\frac{" + latex_poly(f.num()) + "}{" + latex_poly(f.den()) + "}";
}

// ------------------------------------------------------------ rows

struct Row {
  std::vector<std::string> index;  // row coordinates as decimal strings
  RatFunc value;
};

struct TableData {
  std::vector<std::string> index_names;  // "n" or "n","k"
  std::string value_name;                // CSV / JSON column name
  std::string value_latex;               // LaTeX column header
  std::vector<Row> rows;
};

TableData collect(TableKind kind, int max_n) {
  TableData t;
  switch (kind) {
    case TableKind::Beta: {
      t.index_names = {"n"};
      t.value_name = "beta_n";
      t.value_latex = "\\beta_n";
      const BernoulliTable betas(max_n);
      for (int n = 0; n <= max_n; ++n)
        t.rows.push_back({{std::to_string(n)}, betas.beta(n)});
      return t;
    }
    case TableKind::S1:
    case TableKind::S2: {
      t.index_names = {"n", "k"};
      const bool first = kind == TableKind::S1;
      t.value_name = first ? "s1(n,k)" : "s2(n,k)";
      t.value_latex = first ? "s_1(n,k)" : "s_2(n,k)";
      const StirlingTable table = first ? StirlingTable::first(max_n)
                                        : StirlingTable::second(max_n);
      for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
          t.rows.push_back(
              {{std::to_string(n), std::to_string(k)}, table.at(n, k)});
      return t;
    }
    case TableKind::QBinom: {
      t.index_names = {"n", "k"};
      t.value_name = "[n,k]_q";
      t.value_latex = "\\binom{n}{k}_{q}";
      for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
          t.rows.push_back({{std::to_string(n), std::to_string(k)},
                            RatFunc(q_binomial(n, k))});
      return t;
    }
  }
  throw std::invalid_argument("unknown table kind");
}

std::string emit_json(TableKind kind, int max_n, const TableData& t) {
  Json doc;
  doc["schema"] = "qbw-table/1";
  doc["kind"] = to_string(kind);
  doc["max_n"] = max_n;
  Json rows = Json::array();
  for (const Row& row : t.rows) {
    Json j;
    for (size_t i = 0; i < t.index_names.size(); ++i)
      j[t.index_names[i]] = std::stoi(row.index[i]);
    j["value"] = row.value.str();
    j["at_q1"] = to_string(classical_limit(row.value));
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string emit_csv(const TableData& t) {
  std::ostringstream os;
  for (const std::string& name : t.index_names) os << name << ',';
  os << "value,at_q1\n";
  for (const Row& row : t.rows) {
    for (const std::string& idx : row.index) os << idx << ',';
    os << row.value.str() << ',' << to_string(classical_limit(row.value))
       << '\n';
  }
  return os.str();
}

std::string emit_latex(const TableData& t) {
  std::ostringstream os;
  os << "\\begin{tabular}{";
  for (size_t i = 0; i < t.index_names.size(); ++i) os << "r";
  os << "|l|l}\n";
  for (const std::string& name : t.index_names) os << "$" << name << "$ & ";
  os << "$" << t.value_latex << "$ & $q \\to 1$ \\\\\n\\hline\n";
  for (const Row& row : t.rows) {
    for (const std::string& idx : row.index) os << idx << " & ";
    os << "$" << latex_ratfunc(row.value) << "$ & $"
       << latex_rational(classical_limit(row.value)) << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace

TableKind parse_table_kind(const std::string& text) {
  if (text == "beta") return TableKind::Beta;
  if (text == "s1") return TableKind::S1;
  if (text == "s2") return TableKind::S2;
  if (text == "qbinom") return TableKind::QBinom;
  throw std::invalid_argument("unknown table kind '" + text +
                              "'; expected beta, s1, s2 or qbinom");
}

TableFormat parse_table_format(const std::string& text) {
  if (text == "json") return TableFormat::Json;
  if (text == "csv") return TableFormat::Csv;
  if (text == "latex") return TableFormat::Latex;
  throw std::invalid_argument("unknown table format '" + text +
                              "'; expected json, csv or latex");
}

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::Beta:
      return "beta";
    case TableKind::S1:
      return "s1";
    case TableKind::S2:
      return "s2";
    case TableKind::QBinom:
      return "qbinom";
  }
  return "unknown";
}

std::string to_string(TableFormat f) {
  switch (f) {
    case TableFormat::Json:
      return "json";
    case TableFormat::Csv:
      return "csv";
    case TableFormat::Latex:
      return "latex";
  }
  return "unknown";
}

std::string emit_table(TableKind kind, int max_n, TableFormat format) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  const TableData t = collect(kind, max_n);
  switch (format) {
    case TableFormat::Json:
      return emit_json(kind, max_n, t);
    case TableFormat::Csv:
      return emit_csv(t);
    case TableFormat::Latex:
      return emit_latex(t);
  }
  throw std::invalid_argument("unknown table format");
}

}  // namespace qbw
