#pragma once
// Verification suites: executable versions of the identities and inequalities
// the library is built around.  Each criterion draws from its own RNG stream,
// so a criterion gives the same result whether run alone or inside `all`.

#include <cstdint>
#include <string>
#include <vector>

#include "extremal/report.hpp"

namespace extremal {

// kernels, superposed, periodic, forms, et, all
const std::vector<std::string>& suite_names();

// Criteria 1..10; throws std::invalid_argument for other numbers.
void run_criterion(int criterion, std::uint64_t seed, RunReport& report);

RunReport run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace extremal
