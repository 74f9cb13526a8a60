#include "extremal/forms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "extremal/errors.hpp"
#include "extremal/numfmt.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

PointSet::PointSet(std::vector<double> xi, double delta) : xi_(std::move(xi)), delta_(delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("point set: delta must be positive");
  if (xi_.empty()) throw DomainError("point set: no points");
  std::vector<double> s = xi_;
  std::sort(s.begin(), s.end());
  for (double v : s)
    if (!std::isfinite(v)) throw DomainError("point set: non-finite point");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] - s[i - 1] < delta)
      throw DomainError("point set: points " + format_double(s[i - 1]) + " and " + format_double(s[i]) +
                        " closer than delta");
}

Extended r_mu(const MeasureSpec& measure, double t) {
  if (t == 0.0) return Extended::infinity();
  return lorentz_integral(measure, t);
}

double lower_constant_A(const MeasureSpec& measure, double delta) { return minorant_gap_integral(measure, delta); }

double upper_constant_B(const MeasureSpec& measure, double delta) { return majorant_gap_integral(measure, delta); }

double norm2(const Coeffs& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return s;
}

namespace {

double measure_kernel(double t, const void* ctx) {
  return lorentz_integral(*static_cast<const MeasureSpec*>(ctx), t);
}

std::complex<double> form_row(double (*r)(double, const void*), const void* ctx, const std::vector<double>& xi,
                              const Coeffs& a, std::size_t m) {
  std::complex<double> row = 0.0;
  for (std::size_t n = 0; n < xi.size(); ++n)
    if (n != m) row += std::conj(a[n]) * r(xi[m] - xi[n], ctx);
  return a[m] * row;
}

}  // namespace

double evaluate_form_kernel(double (*r)(double, const void*), const void* ctx, const PointSet& points,
                            const Coeffs& a, bool parallel) {
  const auto& xi = points.xi();
  if (a.size() != xi.size()) throw std::invalid_argument("evaluate_form: coefficient count differs from point count");
  const std::size_t n = xi.size();
  std::vector<std::complex<double>> rows(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t m = 0; m < n; ++m) rows[m] = form_row(r, ctx, xi, a, m);
  } else {
    for (std::size_t m = 0; m < n; ++m) rows[m] = form_row(r, ctx, xi, a, m);
  }
  std::complex<double> total = 0.0;
  double mag = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    total += rows[m];
    mag += std::abs(rows[m]);
  }
  if (std::abs(total.imag()) > 1e-12 * std::max(1.0, mag))
    throw std::logic_error("evaluate_form: imaginary part " + format_double(total.imag()) + " is not negligible");
  return total.real();
}

double evaluate_form(const MeasureSpec& measure, const PointSet& points, const Coeffs& a) {
  return evaluate_form_kernel(measure_kernel, &measure, points, a, true);
}

double evaluate_form_serial(const MeasureSpec& measure, const PointSet& points, const Coeffs& a) {
  return evaluate_form_kernel(measure_kernel, &measure, points, a, false);
}

HlsConstants hls_constants(double sigma, double delta) {
  if (!(sigma > 0.0 && sigma <= 2.0)) throw DomainError("hls_constants: sigma must lie in (0, 2]");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("hls_constants: delta must be positive");
  HlsConstants c{sigma, delta, 0.0, std::nullopt, false};
  const double ds = std::pow(delta, sigma);
  if (sigma == 2.0) {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    c.lower = pi2 / 6.0 / ds;
    c.upper = pi2 / 3.0 / ds;
    c.continuity_extension = true;
    return c;
  }
  if (sigma == 1.0) {
    c.lower = 2.0 * std::numbers::ln2 / delta;
    return c;
  }
  const double z = zeta(sigma);
  c.lower = (2.0 - std::pow(2.0, 2.0 - sigma)) * z / ds;
  if (sigma > 1.0) c.upper = 2.0 * z / ds;
  return c;
}

HlsConstants hls_constants_via_measure(double sigma, double delta) {
  if (!(sigma > 0.0 && sigma < 2.0)) throw DomainError("hls_constants_via_measure: sigma must lie in (0, 2)");
  const MeasureSpec mu = MeasureSpec::power(sigma);
  // r_{μσ}(t) = norm·|t|^{−σ}
  const double norm = sigma == 1.0 ? 0.5
                                   : std::numbers::pi / (std::pow(2.0 * std::numbers::pi, sigma) *
                                                         std::sin(0.5 * std::numbers::pi * sigma));
  HlsConstants c{sigma, delta, lower_constant_A(mu, delta) / norm, std::nullopt, false};
  if (sigma > 1.0) c.upper = upper_constant_B(mu, delta) / norm;
  return c;
}

double sharpness_witness(const MeasureSpec& measure, double delta, int N, WitnessKind kind) {
  if (N < 0) throw DomainError("sharpness_witness: N must be nonnegative");
  if (!(delta > 0.0)) throw DomainError("sharpness_witness: delta must be positive");
  if (kind == WitnessKind::Upper && classify(measure) != Admissibility::Cond47)
    throw AdmissibilityError("upper witness needs a Cond47 measure, got " + measure.describe());
  double s = 0.0;
  for (int k = 1; k <= N; ++k) {
    const double term = (N + 1.0 - k) * lorentz_integral(measure, delta * k);
    s += (kind == WitnessKind::Lower && k % 2 == 1) ? -term : term;
  }
  const double form_over_norm = 2.0 * s / (N + 1.0);
  return kind == WitnessKind::Lower ? -form_over_norm : form_over_norm;
}

FormVerdict verify_form(const MeasureSpec& measure, const PointSet& points, const Coeffs& a, WitnessKind kind) {
  const double form = evaluate_form(measure, points, a);
  const double n2 = norm2(a);
  const int N = static_cast<int>(points.size()) - 1;
  if (kind == WitnessKind::Lower) {
    const double A = lower_constant_A(measure, points.delta());
    return {A, form, form + A * n2, sharpness_witness(measure, points.delta(), N, kind)};
  }
  const double B = upper_constant_B(measure, points.delta());
  return {B, form, B * n2 - form, sharpness_witness(measure, points.delta(), N, kind)};
}

PointSet random_point_set(std::mt19937_64& rng, std::size_t count, double delta) {
  std::exponential_distribution<double> gap(1.0);
  std::vector<double> xi(count);
  double x = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    xi[i] = x;
    x += delta * (1.0 + gap(rng));
  }
  return PointSet(std::move(xi), delta);
}

Coeffs random_coeffs(std::mt19937_64& rng, std::size_t count) {
  std::normal_distribution<double> g(0.0, 1.0);
  Coeffs a(count);
  for (auto& c : a) {
    const double re = g(rng);
    c = {re, g(rng)};
  }
  return a;
}

PointsAndCoeffs read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point file " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("xi,re,im", 0) != 0)
    throw std::invalid_argument(path + ":1: header must be xi,re,im");
  PointsAndCoeffs out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto c1 = line.find(','), c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected three columns");
    try {
      std::string_view v(line);
      out.xi.push_back(parse_double(v.substr(0, c1)));
      out.a.emplace_back(parse_double(v.substr(c1 + 1, c2 - c1 - 1)), parse_double(v.substr(c2 + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.xi.empty()) throw std::invalid_argument(path + ": no rows");
  return out;
}

}  // namespace extremal
