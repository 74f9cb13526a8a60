#include "extremal/detail/line_integral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "extremal/quad.hpp"

namespace extremal::detail {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPmin = 2;
constexpr int kPmax = 5;

struct TailModel {
  double X;
  Eigen::VectorXd c;

  double operator()(double x) const {
    const double s = X / x, l = std::log(x / X);
    double v = 0.0;
    int k = 0;
    for (int p = kPmin; p <= kPmax; ++p) {
      const double sp = std::pow(s, p);
      v += c[k++] * sp;
      v += c[k++] * sp * l;
    }
    return v;
  }

  // ∫_X^∞ of the model; ∫_1^∞ s^{-p} log^q s ds = q!/(p−1)^{q+1}.
  double integral() const {
    double v = 0.0;
    int k = 0;
    for (int p = kPmin; p <= kPmax; ++p) {
      v += c[k++] * X / (p - 1.0);
      v += c[k++] * X / ((p - 1.0) * (p - 1.0));
    }
    return v;
  }
};

// Ψ is sampled where T = 1, so f = Ψ/π² there exactly.
TailModel fit_tail(const std::function<double(double)>& f, TrigFactor factor, double X, double& residual) {
  const double offset = factor == TrigFactor::Cos2 ? 0.0 : 0.5;
  std::vector<double> xs;
  for (double x = std::ceil(X / 3.0) + offset; x <= X; x += 1.0) xs.push_back(x);
  const int nb = 2 * (kPmax - kPmin + 1);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(xs.size()), nb);
  Eigen::VectorXd b(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i], s = X / x, l = std::log(x / X);
    int k = 0;
    for (int p = kPmin; p <= kPmax; ++p) {
      A(i, k++) = std::pow(s, p);
      A(i, k++) = std::pow(s, p) * l;
    }
    b[i] = kPi * kPi * f(x);
  }
  TailModel m{X, A.colPivHouseholderQr().solve(b)};
  const double scale = b.cwiseAbs().maxCoeff();
  residual = scale > 0.0 ? (A * m.c - b).cwiseAbs().maxCoeff() / scale : 0.0;
  return m;
}

// ∫_X^∞ Ψ(x) cos(ωx) dx by repeated integration by parts.
double oscillatory_tail(const TailModel& m, double w) {
  if (w == 0.0) return m.integral();
  const double X = m.X, h = 0.02 * X;
  const double f0 = m(X), fp = m(X + h), fm = m(X - h), fp2 = m(X + 2 * h), fm2 = m(X - 2 * h);
  const double d[4] = {f0, (fp - fm) / (2 * h), (fp - 2 * f0 + fm) / (h * h),
                       (fp2 - 2 * fp + 2 * fm - fm2) / (2 * h * h * h)};
  const std::complex<double> iw(0.0, w);
  std::complex<double> s = 0.0, pw = iw;
  for (int k = 0; k < 4; ++k) {
    s += (k % 2 ? -1.0 : 1.0) * d[k] / pw;
    pw *= iw;
  }
  return (-std::polar(1.0, w * X) * s).real();
}

}  // namespace

LineIntegral even_line_integral(const std::function<double(double)>& f, TrigFactor factor, double t, double X) {
  const double w = 2.0 * kPi * t;
  double head = 0.0;
  for (double a = 0.0; a < X; a += 0.5) {
    head += integrate_finite([&](double x) { return f(x) * std::cos(w * x); }, a, a + 0.5, 1e-13).value;
  }
  double residual = 0.0;
  const TailModel m = fit_tail(f, factor, X, residual);
  // cos²·cos(ωx) = ½cos ωx + ¼cos(ω+2π)x + ¼cos(ω−2π)x; sin² flips the last two.
  const double sg = factor == TrigFactor::Cos2 ? 1.0 : -1.0;
  const double tail = (0.5 * oscillatory_tail(m, std::abs(w)) + 0.25 * sg * oscillatory_tail(m, std::abs(w + 2 * kPi)) +
                       0.25 * sg * oscillatory_tail(m, std::abs(w - 2 * kPi))) /
                      (kPi * kPi);
  return {2.0 * (head + tail), head, tail, residual};
}

}  // namespace extremal::detail
