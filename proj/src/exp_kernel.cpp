#include "extremal/exp_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extremal/detail/interp_series.hpp"
#include "extremal/errors.hpp"
#include "extremal/quad.hpp"

namespace extremal {

namespace detail {

int kernel_extra_terms(double lambda) {
  const double decay = std::ceil(std::log(1e14) / lambda);
  return static_cast<int>(std::min(decay, 40.0)) + 10;
}

}  // namespace detail

namespace {

using detail::Derivs;
using detail::Nodes;

void check(double lambda, double x, const char* who) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError(std::string(who) + ": lambda must be positive");
  if (!std::isfinite(x)) throw DomainError(std::string(who) + ": argument must be finite");
}

// d[j] = c (−λ)^j e^{−λb} for j ≥ 1; d[0] supplied separately.
void exp_derivs(double lambda, double b, double c, Derivs& d) {
  double t = c * std::exp(-lambda * b);
  for (int j = 1; j < detail::kDerivs; ++j) {
    t *= -lambda;
    d[j] = t;
  }
}

KernelEval run(double lambda, double x, Nodes nodes) {
  auto fd = [lambda](double b, Derivs& d, int) {
    d[0] = std::exp(-lambda * b);
    exp_derivs(lambda, b, 1.0, d);
  };
  const auto r = detail::interpolation_series(x, nodes, fd, 1.0, detail::kernel_extra_terms(lambda));
  return {lambda, x, r.value, r.terms, r.tail_bound};
}

}  // namespace

KernelEval eval_L(double lambda, double x) {
  check(lambda, x, "eval_L");
  return run(lambda, x, Nodes::HalfInteger);
}

KernelEval eval_M(double lambda, double x) {
  check(lambda, x, "eval_M");
  return run(lambda, x, Nodes::Integer);
}

double minorant_gap(double lambda, double x) {
  check(lambda, x, "minorant_gap");
  if (lambda >= 1.0) return std::exp(-lambda * std::abs(x)) - eval_L(lambda, x).value;
  auto fd = [lambda](double b, Derivs& d, int) {
    d[0] = -std::expm1(-lambda * b);
    exp_derivs(lambda, b, -1.0, d);
  };
  const auto r = detail::interpolation_series(x, Nodes::HalfInteger, fd, 0.0, detail::kernel_extra_terms(lambda));
  return std::expm1(-lambda * std::abs(x)) + r.value;
}

double majorant_gap(double lambda, double x) {
  check(lambda, x, "majorant_gap");
  if (lambda >= 1.0) return eval_M(lambda, x).value - std::exp(-lambda * std::abs(x));
  auto fd = [lambda](double b, Derivs& d, int) {
    d[0] = std::expm1(-lambda * b);
    exp_derivs(lambda, b, 1.0, d);
  };
  const auto r = detail::interpolation_series(x, Nodes::Integer, fd, 0.0, detail::kernel_extra_terms(lambda));
  return r.value - std::expm1(-lambda * std::abs(x));
}

namespace {

struct Hyper {
  double csch, coth;  // of λ/2, overflow free
};

Hyper hyper(double lambda) {
  const double y = 0.5 * lambda;
  if (y < 20.0) {
    const double sh = std::sinh(y);
    return {1.0 / sh, std::cosh(y) / sh};
  }
  const double e = std::exp(-2.0 * y);
  return {2.0 * std::exp(-y) / (1.0 - e), (1.0 + e) / (1.0 - e)};
}

void check_t(double lambda, double t, const char* who) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError(std::string(who) + ": lambda must be positive");
  if (std::isnan(t)) throw DomainError(std::string(who) + ": t is NaN");
}

}  // namespace

// Both transforms are divided through by sinh²(λ/2) so large λ cannot overflow.
KernelTransform eval_Lhat(double lambda, double t) {
  check_t(lambda, t, "eval_Lhat");
  const double at = std::abs(t);
  if (at >= 1.0) return {lambda, t, 0.0};
  const auto [csch, coth] = hyper(lambda);
  const double c = std::cos(std::numbers::pi * at), s = std::sin(std::numbers::pi * at);
  const double num = (1.0 - at) * c * csch + lambda / (2.0 * std::numbers::pi) * s * coth * csch;
  const double den = 1.0 + s * s * csch * csch;
  return {lambda, t, std::max(0.0, num / den)};
}

KernelTransform eval_Mhat(double lambda, double t) {
  check_t(lambda, t, "eval_Mhat");
  const double at = std::abs(t);
  if (at >= 1.0) return {lambda, t, 0.0};
  const auto [csch, coth] = hyper(lambda);
  const double c = std::cos(std::numbers::pi * at), s = std::sin(std::numbers::pi * at);
  const double num = (1.0 - at) * coth + lambda / (2.0 * std::numbers::pi) * s * c * csch * csch;
  const double den = 1.0 + s * s * csch * csch;
  return {lambda, t, std::max(0.0, num / den)};
}

double lhat_haar_integral(double t, double tol) {
  if (t == 0.0 || !std::isfinite(t)) throw DomainError("lhat_haar_integral: t must be finite and nonzero");
  if (std::abs(t) >= 1.0) return 0.0;
  return integrate_measure([t](double l) { return eval_Lhat(l, t).value; }, MeasureSpec::haar(), tol).value;
}

}  // namespace extremal
