#include "extremal/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

constexpr double kTaylorBelow = 1e-3;
constexpr double kSeriesUpTo = 2.0;

void check_lambda(double lambda, const char* who) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError(std::string(who) + ": lambda must be positive and finite");
}

// sinh(y) − y and y·cosh(y) − sinh(y) by their positive power series, y ≤ 1.
double sinh_minus_id(double y) {
  const double y2 = y * y;
  double term = y * y2 / 6.0, sum = 0.0;
  for (int k = 1; k < 40 && term > 1e-18 * sum; ++k) {
    sum += term;
    term *= y2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return sum;
}

double ycosh_minus_sinh(double y) {
  const double y2 = y * y;
  double pow_fact = y * y2 / 6.0;  // y^{2k+1}/(2k+1)!
  double sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    const double term = 2.0 * k * pow_fact;
    sum += term;
    if (term < 1e-18 * sum) break;
    pow_fact *= y2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return sum;
}

}  // namespace

namespace detail {

double defect_minorant_taylor(double l) {
  const double l2 = l * l;
  return l * (1.0 / 12.0 + l2 * (-7.0 / 2880.0 + l2 * (31.0 / 483840.0)));
}

double defect_minorant_series(double l) {
  const double y = 0.5 * l;
  return sinh_minus_id(y) / (y * std::sinh(y));
}

double defect_minorant_direct(double l) { return 2.0 / l - 1.0 / std::sinh(0.5 * l); }

double defect_majorant_taylor(double l) {
  const double l2 = l * l;
  return l * (1.0 / 6.0 + l2 * (-1.0 / 360.0 + l2 * (1.0 / 15120.0)));
}

double defect_majorant_series(double l) {
  const double y = 0.5 * l;
  return ycosh_minus_sinh(y) / (y * std::sinh(y));
}

double defect_majorant_direct(double l) { return 1.0 / std::tanh(0.5 * l) - 2.0 / l; }

}  // namespace detail

double defect_minorant(double lambda) {
  check_lambda(lambda, "defect_minorant");
  if (lambda < kTaylorBelow) return detail::defect_minorant_taylor(lambda);
  if (lambda <= kSeriesUpTo) return detail::defect_minorant_series(lambda);
  return detail::defect_minorant_direct(lambda);
}

double defect_majorant(double lambda) {
  check_lambda(lambda, "defect_majorant");
  if (lambda < kTaylorBelow) return detail::defect_majorant_taylor(lambda);
  if (lambda <= kSeriesUpTo) return detail::defect_majorant_series(lambda);
  return detail::defect_majorant_direct(lambda);
}

namespace {

constexpr int kEtaTerms = 64;

// Borwein weights (d_n − d_k)/d_n for the accelerated eta series.
struct EtaWeights {
  std::array<double, kEtaTerms> w{};
  EtaWeights() {
    const int n = kEtaTerms;
    std::array<long double, kEtaTerms + 1> d{};
    long double t = 1.0L / n, acc = 0.0L;
    for (int i = 0; i <= n; ++i) {
      acc += t;
      d[i] = n * acc;
      t *= 4.0L * (n + i) * (n - i) / ((2.0L * i + 1.0L) * (2.0L * i + 2.0L));
    }
    for (int k = 0; k < n; ++k) w[k] = static_cast<double>((d[n] - d[k]) / d[n]);
  }
};

const EtaWeights& eta_weights() {
  static const EtaWeights w;
  return w;
}

}  // namespace

ZetaGamma zeta_eval(double s) {
  if (!(s > -1.0 && s < 2.0) || s == 1.0)
    throw DomainError("zeta: argument outside (-1, 2) \\ {1}");
  const auto& w = eta_weights().w;
  double eta = 0.0, mag = 0.0;
  for (int k = kEtaTerms - 1; k >= 0; --k) {
    const double term = w[k] * std::pow(k + 1.0, -s);
    eta += (k % 2 == 0) ? term : -term;
    mag += term;
  }
  const double denom = -std::expm1((1.0 - s) * std::numbers::ln2);
  const double value = eta / denom;
  const double err = 8.0 * kEtaTerms * std::numeric_limits<double>::epsilon() * mag / std::abs(denom) +
                     4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
  return {s, value, err};
}

double zeta(double s) { return zeta_eval(s).value; }

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Γ(x) for x ≥ 1.
double gamma_core(double x) {
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  // Split the power to delay overflow for large x.
  const double h = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * h * (h * std::exp(-t)) * a;
}

}  // namespace

ZetaGamma gamma_eval(double s) {
  if (!(s > -1.0) || s == 0.0 || std::isnan(s)) throw DomainError("gamma: argument outside (-1, inf) \\ {0}");
  double value;
  if (s >= 1.0) value = gamma_core(s);
  else if (s > 0.0) value = gamma_core(s + 1.0) / s;
  else value = gamma_core(s + 2.0) / (s * (s + 1.0));
  if (!std::isfinite(value)) throw DomainError("gamma: overflow");
  return {s, value, 4e-15 * std::abs(value)};
}

double gamma(double s) { return gamma_eval(s).value; }

}  // namespace extremal
