#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace extremal {

struct Check {
  std::string name;
  bool pass;
  double observed;
  double expected;
  double tol;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Check> checks;

  bool all_pass() const;
  std::string to_json() const;
};

// JSON number for a double, or a string for non-finite values.
nlohmann::ordered_json json_number(double v);

}  // namespace extremal
