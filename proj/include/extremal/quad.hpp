#pragma once

#include <cstddef>
#include <functional>

#include "extremal/measures.hpp"

namespace extremal {

struct QuadResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  std::size_t evaluations = 0;
};

struct QuadOptions {
  double tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_evals = 200000;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss–Kronrod (7/15) on [a, b].  Endpoints are never sampled.
QuadResult integrate_finite(const Integrand& f, double a, double b, double tol = 1e-10);
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadOptions& opt);

// ∫_0^∞ g dμ.  Weight measures are split at λ = 1, the tail mapped by λ = 1/u,
// and both pieces pre-warped by a power map matched to the weight exponent.
QuadResult integrate_measure(const Integrand& g, const MeasureSpec& measure, double tol = 1e-10);
QuadResult integrate_measure(const Integrand& g, const MeasureSpec& measure, const QuadOptions& opt);

}  // namespace extremal
