#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct AdmissibilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an iteration runs out of budget.  best_estimate is the last
// value reached, abs_err its error estimate at that point.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, double best, double err)
      : std::runtime_error(what), best_estimate(best), abs_err(err) {}
  double best_estimate;
  double abs_err;
};

// Root too close to the unit circle for a stable Jensen comparison.
struct ConditioningError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace extremal
