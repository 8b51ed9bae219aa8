#include "ulam/report.hpp"

#include <algorithm>
#include <sstream>

#include "ulam/ball_lis.hpp"

namespace ulam {

BoundReport bound_report(const CodeParams &params, const BoundOptions &options) {
  BoundReport r{params, singleton_upper(params), gv_lower(params), {}, {}, {}, {}, 0, 0};
  r.best_upper = r.singleton_upper;
  r.best_lower = std::max(r.gv_lower, BigInt(2));
  if (options.with_ip) {
    const IpBound ip = ip_upper_bound(params, options.ip_budget);
    r.ip_upper = ip.value;
    r.ip_status = ip.status;
    r.best_upper = std::min(r.best_upper, ip.value);
  }
  if (options.with_sphere) {
    const SphereBounds s = sphere_packing_bounds(params, EnumerationOptions{options.enumeration_limit, 1});
    r.sphere_lower = s.lower;
    r.sphere_upper = s.upper;
    r.best_lower = std::max(r.best_lower, s.lower);
    r.best_upper = std::min(r.best_upper, s.upper);
  }
  return r;
}

nlohmann::ordered_json json_integer(const BigInt &x) {
  if (const auto v = to_uint64(x))
    return *v;
  return to_string(x);
}

nlohmann::ordered_json to_json(const BoundReport &r) {
  nlohmann::ordered_json j;
  j["params"] = {{"n", r.params.n()}, {"d", r.params.d()}};
  j["singleton_upper"] = json_integer(r.singleton_upper);
  j["gv_lower"] = json_integer(r.gv_lower);
  j["ip_upper"] = r.ip_upper ? json_integer(*r.ip_upper) : nullptr;
  j["ip_status"] = r.ip_status ? nlohmann::ordered_json(to_string(*r.ip_status)) : nullptr;
  j["sphere_lower"] = r.sphere_lower ? json_integer(*r.sphere_lower) : nullptr;
  j["sphere_upper"] = r.sphere_upper ? json_integer(*r.sphere_upper) : nullptr;
  j["best_lower"] = json_integer(r.best_lower);
  j["best_upper"] = json_integer(r.best_upper);
  return j;
}

std::string to_text(const BoundReport &r) {
  const auto opt = [](const std::optional<BigInt> &x) { return x ? to_string(*x) : std::string("-"); };
  const std::pair<const char *, std::string> rows[] = {
      {"n", std::to_string(r.params.n())},
      {"d", std::to_string(r.params.d())},
      {"singleton_upper", to_string(r.singleton_upper)},
      {"gv_lower", to_string(r.gv_lower)},
      {"ip_upper", opt(r.ip_upper) + (r.ip_status ? std::string(" (") + to_string(*r.ip_status) + ")" : "")},
      {"sphere_lower", opt(r.sphere_lower)},
      {"sphere_upper", opt(r.sphere_upper)},
      {"best_lower", to_string(r.best_lower)},
      {"best_upper", to_string(r.best_upper)},
  };
  std::ostringstream out;
  for (const auto &[name, value] : rows) {
    out << name << std::string(17 - std::string(name).size(), ' ') << value << '\n';
  }
  return out.str();
}

} // namespace ulam
