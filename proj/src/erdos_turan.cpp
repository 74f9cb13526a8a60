#include "extremal/erdos_turan.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "extremal/errors.hpp"
#include "extremal/numfmt.hpp"
#include "extremal/quad.hpp"

namespace extremal {

namespace {

constexpr double kInteriorGuard = 1.0 + 1e-15;

}  // namespace

RootSet reflect_roots(const RootSet& alpha) {
  RootSet beta(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    beta[i] = std::abs(alpha[i]) <= kInteriorGuard ? alpha[i] : 1.0 / std::conj(alpha[i]);
  return beta;
}

EtBound et_bound(const RootSet& alpha, int N) {
  if (N < 0) throw DomainError("et_bound: N must be nonnegative");
  if (alpha.empty()) throw DomainError("et_bound: no roots");
  for (const auto& a : alpha)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw DomainError("et_bound: non-finite root");
  EtBound r{N, static_cast<int>(alpha.size()), 0.0, {}, 0.0};
  for (const auto& a : alpha) {
    const double m = std::abs(a);
    if (m > kInteriorGuard) r.logplus_sum += std::log(m);
  }
  const RootSet beta = reflect_roots(alpha);
  RootSet pw = beta;
  double sum = 0.0;
  r.power_sums.reserve(N);
  for (int n = 1; n <= N; ++n) {
    std::complex<double> s = 0.0;
    for (std::size_t m = 0; m < pw.size(); ++m) {
      s += pw[m];
      pw[m] *= beta[m];
    }
    r.power_sums.push_back(std::abs(s));
    sum += std::abs(s) / n;
  }
  r.bound = r.logplus_sum + r.M * std::numbers::ln2 / (N + 1.0) + sum;
  return r;
}

double log_abs_on_circle(const RootSet& alpha, double x) {
  const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * x);
  // Product with exponent tracking: one log per call instead of M.
  double mant = 1.0;
  long exp2 = 0;
  for (const auto& a : alpha) {
    const double d = std::abs(z - a);
    if (d == 0.0) return -std::numeric_limits<double>::infinity();
    mant *= d;
    int e;
    mant = std::frexp(mant, &e);
    exp2 += e;
  }
  return std::log(mant) + exp2 * std::numbers::ln2;
}

namespace {

double golden_max(const RootSet& alpha, double lo, double hi, double& best_val) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = log_abs_on_circle(alpha, c), fd = log_abs_on_circle(alpha, d);
  for (int it = 0; it < 48; ++it) {
    if (fc > fd) {
      b = d, d = c, fd = fc;
      c = b - g * (b - a);
      fc = log_abs_on_circle(alpha, c);
    } else {
      a = c, c = d, fc = fd;
      d = a + g * (b - a);
      fd = log_abs_on_circle(alpha, d);
    }
  }
  const double x = fc > fd ? c : d;
  best_val = std::max(fc, fd);
  return x;
}

double refine(const RootSet& alpha, const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (values[i] > values[best]) best = i;
  double val = values[best];
  double x = static_cast<double>(best) / n;
  double h = 1.0 / n;
  for (int round = 0; round < 3; ++round) {
    double v;
    const double xr = golden_max(alpha, x - h, x + h, v);
    if (v > val) val = v, x = xr;
    h *= 0.25;
  }
  return val;
}

void check_samples(std::size_t samples) {
  if (samples < 1024) throw DomainError("sup_log_oracle: need at least 1024 samples");
}

}  // namespace

double sup_log_oracle(const RootSet& alpha, std::size_t samples) {
  check_samples(samples);
  std::vector<double> values(samples);
  const long n = static_cast<long>(samples);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) values[i] = log_abs_on_circle(alpha, static_cast<double>(i) / n);
  return refine(alpha, values);
}

double sup_log_oracle_serial(const RootSet& alpha, std::size_t samples) {
  check_samples(samples);
  std::vector<double> values(samples);
  for (std::size_t i = 0; i < samples; ++i) values[i] = log_abs_on_circle(alpha, static_cast<double>(i) / samples);
  return refine(alpha, values);
}

double jensen_check(const RootSet& alpha, double tol) {
  double logplus = 0.0;
  for (const auto& a : alpha) {
    const double m = std::abs(a);
    if (std::abs(m - 1.0) < 1e-9) throw ConditioningError("jensen_check: root within 1e-9 of the unit circle");
    if (m > 1.0) logplus += std::log(m);
  }
  QuadOptions opt;
  opt.tol = 0.1 * tol;
  opt.max_evals = 2000000;
  const double mean = integrate_finite([&](double x) { return log_abs_on_circle(alpha, x); }, 0.0, 1.0, opt).value;
  return std::abs(logplus - mean);
}

RootSet read_roots_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open roots file " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("re,im", 0) != 0) throw std::invalid_argument(path + ":1: header must be re,im");
  RootSet out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto c = line.find(',');
    if (c == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected two columns");
    try {
      out.emplace_back(parse_double(std::string_view(line).substr(0, c)), parse_double(std::string_view(line).substr(c + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw std::invalid_argument(path + ": no roots");
  return out;
}

RootSet random_roots(std::mt19937_64& rng, std::size_t M, double r) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RootSet out(M);
  for (auto& a : out) {
    const double rad = r * std::sqrt(u(rng));
    const double th = 2.0 * std::numbers::pi * u(rng);
    a = std::polar(rad, th);
  }
  return out;
}

}  // namespace extremal
