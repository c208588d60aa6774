#pragma once

#include <string>

namespace qbw {

/// Which table to emit.
enum class TableKind {
  Beta,    // the q-deformed Bernoulli numbers
  S1,      // first-kind triangle
  S2,      // second-kind triangle
  QBinom,  // Gaussian binomial triangle
};

enum class TableFormat { Json, Csv, Latex };

/// Parses "beta" | "s1" | "s2" | "qbinom"; throws std::invalid_argument.
TableKind parse_table_kind(const std::string& text);

/// Parses "json" | "csv" | "latex"; throws std::invalid_argument.
TableFormat parse_table_format(const std::string& text);

std::string to_string(TableKind k);
std::string to_string(TableFormat f);

/// Renders the requested table for rows 0..max_n.  Every row carries
/// the exact entry in canonical string form together with its q -> 1
/// specialization.  max_n must be non-negative.
std::string emit_table(TableKind kind, int max_n, TableFormat format);

}  // namespace qbw
