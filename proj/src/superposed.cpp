#include "extremal/superposed.hpp"

#include <cmath>
#include <span>

#include "extremal/detail/interp_series.hpp"
#include "extremal/errors.hpp"
#include "extremal/exp_kernel.hpp"
#include "extremal/quad.hpp"

namespace extremal {

namespace {

using detail::Derivs;
using detail::Nodes;

constexpr int kFirstExtra = 16;
constexpr int kMaxExtra = 1 << 20;
constexpr double kStopRel = 1e-10;

SeriesResult doubling(const MeasureSpec& measure, double x, Nodes nodes, double f0) {
  if (!std::isfinite(x)) throw DomainError("superposed evaluation: x must be finite");
  auto fd = [&measure](double b, Derivs& d, int n) {
    f_mu_derivatives(measure, b, std::span<double>(d.data(), static_cast<std::size_t>(n)));
  };
  auto prev = detail::interpolation_series(x, nodes, fd, f0, kFirstExtra);
  for (int extra = 2 * kFirstExtra; extra <= kMaxExtra; extra *= 2) {
    auto cur = detail::interpolation_series(x, nodes, fd, f0, extra);
    const double diff = std::abs(cur.value - prev.value);
    if (diff < kStopRel * std::max(1.0, std::abs(cur.value)))
      return {cur.value, diff + cur.tail_bound, cur.terms};
    prev = cur;
  }
  throw ConvergenceError("superposed series did not settle", prev.value, prev.tail_bound);
}

void require_cond47(const MeasureSpec& measure) {
  if (classify(measure) != Admissibility::Cond47)
    throw AdmissibilityError("majorant needs a Cond47 measure, got " + measure.describe());
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be positive and finite");
}

}  // namespace

SeriesResult eval_G_series(const MeasureSpec& measure, double x) {
  return doubling(measure, x, Nodes::HalfInteger, 0.0);
}

double eval_G(const MeasureSpec& measure, double x) { return eval_G_series(measure, x).value; }

SeriesResult eval_H_series(const MeasureSpec& measure, double x) {
  require_cond47(measure);
  return doubling(measure, x, Nodes::Integer, f_mu(measure, 0.0).value());
}

double eval_H(const MeasureSpec& measure, double x) { return eval_H_series(measure, x).value; }

double eval_G_dilated(const MeasureSpec& measure, double delta, double x) {
  check_delta(delta);
  return eval_G(dilate(measure, delta), delta * x);
}

double eval_H_dilated(const MeasureSpec& measure, double delta, double x) {
  check_delta(delta);
  return eval_H(dilate(measure, delta), delta * x);
}

double eval_U(double x) { return -eval_G(MeasureSpec::haar(), x); }

double defect_integral(const MeasureSpec& measure, ApproxKind kind, double delta, double x, double tol) {
  check_delta(delta);
  const double y = delta * x;
  if (kind == ApproxKind::Minorant)
    return integrate_measure([delta, y](double l) { return minorant_gap(l / delta, y); }, measure, tol).value;
  require_cond47(measure);
  return integrate_measure([delta, y](double l) { return majorant_gap(l / delta, y); }, measure, tol).value;
}

DefectProfile defect(const MeasureSpec& measure, ApproxKind kind, double delta, double x) {
  check_delta(delta);
  if (kind == ApproxKind::Majorant) require_cond47(measure);
  const Extended fx = f_mu(measure, x);
  if (fx.is_infinite()) return {x, Extended::infinity(), 0.0};
  const MeasureSpec nu = dilate(measure, delta);
  const double shift = f_mu(measure, 1.0 / delta).value();
  SeriesResult s;
  double a;
  if (kind == ApproxKind::Minorant) {
    s = eval_G_series(nu, delta * x);
    a = fx.value() - shift - s.value;
  } else {
    s = eval_H_series(nu, delta * x);
    a = s.value + shift - fx.value();
  }
  const double ty = delta * x;
  QuadResult q = kind == ApproxKind::Minorant
      ? integrate_measure([delta, ty](double l) { return minorant_gap(l / delta, ty); }, measure)
      : integrate_measure([delta, ty](double l) { return majorant_gap(l / delta, ty); }, measure);
  return {x, a, std::abs(a - q.value) + q.abs_err_est + s.abs_err};
}

EntireApprox::EntireApprox(MeasureSpec m, ApproxKind k, double d, Strategy s)
    : measure(std::move(m)), kind(k), delta(d), strategy(s) {
  check_delta(delta);
  const Admissibility adm = classify(measure);
  if (kind == ApproxKind::Majorant && adm != Admissibility::Cond47)
    throw AdmissibilityError("majorant needs a Cond47 measure, got " + measure.describe());
}

Extended EntireApprox::target(double x) const {
  const Extended fx = f_mu(measure, x);
  if (fx.is_infinite()) return fx;
  return fx.value() - f_mu(measure, 1.0 / delta).value();
}

double EntireApprox::operator()(double x) const {
  if (strategy == Strategy::InterpolationSeries)
    return kind == ApproxKind::Minorant ? eval_G_dilated(measure, delta, x) : eval_H_dilated(measure, delta, x);
  const Extended t = target(x);
  if (t.is_infinite()) throw DomainError("defect-integral strategy needs a finite target at x");
  const double gap = defect_integral(measure, kind, delta, x);
  return kind == ApproxKind::Minorant ? t.value() - gap : t.value() + gap;
}

}  // namespace extremal
