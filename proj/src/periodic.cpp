#include "extremal/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extremal/errors.hpp"
#include "extremal/exp_kernel.hpp"
#include "extremal/quad.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

TrigPoly TrigPoly::from_nonnegative(std::vector<std::complex<double>> c) {
  if (c.empty()) throw DomainError("TrigPoly: need at least c(0)");
  if (c[0].imag() != 0.0) throw DomainError("TrigPoly: c(0) must be real");
  TrigPoly p;
  p.c_ = std::move(c);
  return p;
}

TrigPoly TrigPoly::from_full(const std::vector<std::complex<double>>& c) {
  if (c.size() % 2 == 0) throw DomainError("TrigPoly: need 2N+1 coefficients");
  const std::size_t N = c.size() / 2;
  std::vector<std::complex<double>> half(c.begin() + static_cast<std::ptrdiff_t>(N), c.end());
  for (std::size_t n = 1; n <= N; ++n)
    if (c[N - n] != std::conj(c[N + n])) throw DomainError("TrigPoly: coefficients not conjugate symmetric");
  return from_nonnegative(std::move(half));
}

std::complex<double> TrigPoly::coeff(int n) const {
  const int a = n < 0 ? -n : n;
  if (a > degree()) return 0.0;
  return n < 0 ? std::conj(c_[a]) : c_[a];
}

double TrigPoly::operator()(double x) const {
  const double t = 2.0 * std::numbers::pi * frac(x);
  double s = 0.0;
  for (int n = degree(); n >= 1; --n)
    s += c_[n].real() * std::cos(n * t) - c_[n].imag() * std::sin(n * t);
  return c_[0].real() + 2.0 * s;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly p = *this;
  for (auto& v : p.c_) v = -v;
  return p;
}

double frac(double x) {
  const double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

double dist_to_int(double x) {
  const double f = frac(x);
  return std::min(f, 1.0 - f);
}

namespace {

void check_lambda(double lambda, const char* who) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError(std::string(who) + ": lambda must be positive");
}

}  // namespace

double eval_p(double lambda, double x) {
  check_lambda(lambda, "eval_p");
  const double u = std::abs(frac(x) - 0.5);
  if (lambda < 1.0) {
    const double sh = std::sinh(0.5 * lambda * u);
    return 2.0 * sh * sh / std::sinh(0.5 * lambda) - defect_minorant(lambda);
  }
  return (std::exp(-lambda * (0.5 - u)) + std::exp(-lambda * (0.5 + u))) / -std::expm1(-lambda) - 2.0 / lambda;
}

double eval_j(double lambda, double x) {
  check_lambda(lambda, "eval_j");
  const double f = frac(x);
  if (f == 0.0) return 0.0;
  const double u = f - 0.5;
  if (lambda < 1.0) return lambda * std::sinh(lambda * u) / std::sinh(0.5 * lambda);
  const double au = std::abs(u);
  const double v = lambda * (std::exp(-lambda * (0.5 - au)) - std::exp(-lambda * (0.5 + au))) / -std::expm1(-lambda);
  return u < 0.0 ? -v : v;
}

namespace {

void check_degree(int N) {
  if (N < 0) throw DomainError("degree N must be nonnegative");
}

}  // namespace

TrigPoly trig_minorant_l(double lambda, int N) {
  check_lambda(lambda, "trig_minorant_l");
  check_degree(N);
  const double k = N + 1.0, lk = lambda / k;
  std::vector<std::complex<double>> c(N + 1);
  c[0] = -defect_minorant(lk) / k;
  for (int n = 1; n <= N; ++n) c[n] = eval_Lhat(lk, n / k).value / k;
  return TrigPoly::from_nonnegative(std::move(c));
}

TrigPoly trig_majorant_m(double lambda, int N) {
  check_lambda(lambda, "trig_majorant_m");
  check_degree(N);
  const double k = N + 1.0, lk = lambda / k;
  std::vector<std::complex<double>> c(N + 1);
  c[0] = defect_majorant(lk) / k;
  for (int n = 1; n <= N; ++n) c[n] = eval_Mhat(lk, n / k).value / k;
  return TrigPoly::from_nonnegative(std::move(c));
}

namespace {

constexpr int kPowerHead = 64;

// Σ_{n≥1} n^{−σ} cos 2πnx for x ∉ ℤ: a direct head, then the remainder
//   Re Σ_{n>K} n^{−σ} z^n = Re (1/Γ(σ)) ∫_0^∞ u^{σ−1} (z e^{−u})^{K+1}/(1 − z e^{−u}) du
// with u = w^{1/σ} to absorb the endpoint power.
double cosine_power_series(double sigma, double x) {
  const double t = 2.0 * std::numbers::pi * frac(x);
  double head = 0.0;
  for (int n = kPowerHead; n >= 1; --n) head += std::pow(n, -sigma) * std::cos(n * t);
  const std::complex<double> z = std::polar(1.0, t);
  const double K1 = kPowerHead + 1.0;
  const std::complex<double> zk = std::polar(1.0, K1 * t);
  auto integrand = [&](double w) {
    const double u = std::pow(w, 1.0 / sigma);
    const double e = std::exp(-u);
    const std::complex<double> val = zk * std::exp(-K1 * u) / (1.0 - z * e);
    // u^{σ−1} du = (1/σ) dw
    return val.real() / sigma;
  };
  // e^{−(K+1)u} < 1e−18 beyond u = 42/(K+1).
  const double wmax = std::pow(42.0 / K1, sigma);
  QuadOptions opt;
  opt.tol = 1e-12;
  opt.rel_tol = 1e-13;
  const double tail = integrate_finite(integrand, 0.0, wmax, opt).value / gamma(sigma);
  return head + tail;
}

}  // namespace

Extended q_mu(const MeasureSpec& measure, double x) {
  if (!std::isfinite(x)) throw DomainError("q_mu: x must be finite");
  const double d = dist_to_int(x);
  const auto& fam = measure.family();
  if (auto* h = std::get_if<HaarLog>(&fam)) {
    if (d == 0.0) return Extended::infinity();
    return -h->scale * std::log(2.0 * std::sin(std::numbers::pi * d));
  }
  if (auto* p = std::get_if<PowerLaw>(&fam)) {
    const double s = p->sigma;
    const double norm = std::numbers::pi / (std::pow(2.0 * std::numbers::pi, s) * std::sin(0.5 * std::numbers::pi * s));
    if (d == 0.0) {
      if (s < 1.0) return Extended::infinity();
      return 2.0 * p->scale * norm * zeta(s);
    }
    return 2.0 * p->scale * norm * cosine_power_series(s, d);
  }
  if (auto* a = std::get_if<Atomic>(&fam)) {
    double s = 0.0;
    for (auto [lam, w] : a->atoms) s += w * eval_p(lam, x);
    return s;
  }
  try {
    return integrate_measure([d](double l) { return eval_p(l, d); }, measure).value;
  } catch (const DivergenceError&) {
    if (d == 0.0) return Extended::infinity();
    throw;
  }
}

double q_mu_coefficient(const MeasureSpec& measure, int n) {
  if (n == 0) return 0.0;
  return lorentz_integral(measure, n);
}

namespace {

TrigPoly superposed_poly(const MeasureSpec& measure, int N, double tol, bool majorant) {
  check_degree(N);
  const double k = N + 1.0;
  // ∫ F(λ/(N+1)) dμ(λ) = ∫ F(u) dν(u) with ν = dilate(μ, N+1).
  const MeasureSpec nu = dilate(measure, k);
  QuadOptions opt;
  opt.tol = tol;
  std::vector<std::complex<double>> c(N + 1);
  if (majorant) c[0] = integrate_measure([](double u) { return defect_majorant(u); }, nu, opt).value / k;
  else c[0] = -integrate_measure([](double u) { return defect_minorant(u); }, nu, opt).value / k;
  for (int n = 1; n <= N; ++n) {
    const double t = n / k;
    c[n] = majorant ? integrate_measure([t](double u) { return eval_Mhat(u, t).value; }, nu, opt).value / k
                    : integrate_measure([t](double u) { return eval_Lhat(u, t).value; }, nu, opt).value / k;
  }
  return TrigPoly::from_nonnegative(std::move(c));
}

}  // namespace

TrigPoly trig_minorant_g(const MeasureSpec& measure, int N, double tol) {
  classify(measure);
  return superposed_poly(measure, N, tol, false);
}

TrigPoly trig_majorant_h(const MeasureSpec& measure, int N, double tol) {
  if (classify(measure) != Admissibility::Cond47)
    throw AdmissibilityError("h_mu needs a Cond47 measure (finite ∫λ/(λ+1)dμ), got " + measure.describe());
  return superposed_poly(measure, N, tol, true);
}

TrigPoly trig_log_majorant_u(int N, double tol) { return -trig_minorant_g(MeasureSpec::haar(), N, tol); }

}  // namespace extremal
