#pragma once

#include "qbw/ratfunc.hpp"

#include <map>
#include <string>

namespace qbw {

/// Which reading of a disputed formula a check exercises.
enum class Variant { AsPrinted, Corrected };

std::string to_string(Variant v);

/// Named integer parameters of one checked instance, e.g. {n:3, k:1}.
using ParamMap = std::map<std::string, int>;

/// "k=1,n=3" (keys sorted).
std::string params_str(const ParamMap& p);

/// Outcome of checking one instance of one identity variant.
/// When the two sides differ, lhs/rhs/difference hold canonical
/// witness strings.
struct IdentityResult {
  std::string id;
  std::string variant;
  ParamMap params;
  bool equal = false;
  std::string lhs;
  std::string rhs;
  std::string difference;
  std::string note;
};

IdentityResult make_result(std::string id, std::string variant, ParamMap params,
                           bool equal, std::string note = "");

/// Compares two rational functions and records witnesses on mismatch.
IdentityResult check_equal(std::string id, std::string variant, ParamMap params,
                           const RatFunc& lhs, const RatFunc& rhs,
                           std::string note = "");

}  // namespace qbw
