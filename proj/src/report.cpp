#include "extremal/report.hpp"

#include <cmath>

#include "extremal/numfmt.hpp"

namespace extremal {

bool RunReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["seed"] = seed;
  j["pass"] = all_pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["observed"] = json_number(c.observed);
    e["expected"] = json_number(c.expected);
    e["tol"] = json_number(c.tol);
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["results"] = results;
  return j.dump(2) + "\n";
}

}  // namespace extremal
