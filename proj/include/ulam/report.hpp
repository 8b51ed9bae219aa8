#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ulam/bounds.hpp"
#include "ulam/budget.hpp"
#include "ulam/ilp.hpp"

namespace ulam {

/// Every bound on A(n, d) the library can compute for one parameter pair.
struct BoundReport {
  CodeParams params;
  BigInt singleton_upper;
  BigInt gv_lower;
  std::optional<BigInt> ip_upper;
  std::optional<IlpStatus> ip_status;
  std::optional<BigInt> sphere_lower;
  std::optional<BigInt> sphere_upper;
  BigInt best_lower;
  BigInt best_upper;
};

struct BoundOptions {
  bool with_ip = false;
  bool with_sphere = false;
  Budget ip_budget{};
  unsigned enumeration_limit = 9;
};

/**
 * best_lower also counts the two-word code {e, reversal}, at distance n - 1.
 * The sphere bounds need exact enumeration and raise CapacityError past the limit.
 */
BoundReport bound_report(const CodeParams &params, const BoundOptions &options = {});

/// Stable field names; integers beyond 64 bits are written as decimal strings.
nlohmann::ordered_json to_json(const BoundReport &report);

/// Aligned "name  value" lines.
std::string to_text(const BoundReport &report);

/// An integer as a JSON number when it fits in 64 bits, else as a string.
nlohmann::ordered_json json_integer(const BigInt &x);

} // namespace ulam
