#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace extremal::detail {

enum class Nodes { HalfInteger, Integer };

struct SeriesValue {
  double value;
  double tail_bound;
  int terms;
};

inline constexpr int kDerivs = 7;
using Derivs = std::array<double, kDerivs>;

// Evaluates the interpolation series
//   T(x) Σ_b { f(b)/(x−b)² + f'(b)/(x−b) }
// over nodes b = ±(j+½) (T = cos²πx/π²) or b ∈ ℤ (T = sin²πx/π², the b = 0
// term being f0/x²), for an even f.  Nodes up to ceil|x| + extra are summed
// directly in ± pairs; the rest by Euler–Maclaurin on the pair primitive
//   H(b) = f(b) (1/(b−x) + 1/(b+x)).
// fd(b, d, n) must fill d[j] = f^{(j)}(b) for j < n, b > 0.  The node nearest to x is
// handled with the trig factor cancelled analytically, so nodes are exact.
template <class F>
SeriesValue interpolation_series(double x, Nodes nodes, F&& fd, double f0, int extra) {
  constexpr double pi = std::numbers::pi;
  const double ax = std::abs(x);
  const double off = nodes == Nodes::HalfInteger ? 0.5 : 0.0;
  const double bstar = nodes == Nodes::HalfInteger ? std::floor(ax) + 0.5 : std::floor(ax + 0.5);
  const double eps = ax - bstar;
  const double se = std::sin(pi * eps);
  const double trig = se * se / (pi * pi);
  const double s = eps == 0.0 ? 1.0 : se / (pi * eps);
  const double s2 = s * s;

  double node_part = 0.0, rest = 0.0;
  if (nodes == Nodes::Integer) {
    if (bstar == 0.0) node_part = f0 * s2;
    else rest += f0 / (ax * ax);
  }
  const int first = nodes == Nodes::HalfInteger ? 0 : 1;
  const int last = static_cast<int>(std::ceil(ax)) + extra;
  Derivs d{};
  for (int j = first; j <= last; ++j) {
    const double b = j + off;
    fd(b, d, 2);
    const double up = 1.0 / (b + ax);
    double term = d[0] * up * up - d[1] * up;
    if (b == bstar) {
      node_part += (d[0] + d[1] * eps) * s2;
    } else {
      const double dn = 1.0 / (b - ax);
      term += d[0] * dn * dn - d[1] * dn;
    }
    rest += term;
  }

  // Midpoint Euler–Maclaurin for Σ_{k≥0} −H'(a + k + ½).
  const double a = last + off + 0.5;
  fd(a, d, kDerivs);
  Derivs g{};
  {
    const double p = 1.0 / (a - ax), q = 1.0 / (a + ax);
    double pp = p, qq = q, fact = 1.0;
    for (int j = 0; j < kDerivs; ++j) {
      g[j] = ((j % 2 == 0) ? 1.0 : -1.0) * fact * (pp + qq);
      pp *= p;
      qq *= q;
      fact *= j + 1;
    }
  }
  auto hder = [&](int m) {
    double sum = 0.0, binom = 1.0;
    for (int i = 0; i <= m; ++i) {
      sum += binom * d[m - i] * g[i];
      binom = binom * (m - i) / (i + 1);
    }
    return sum;
  };
  const double h6 = 31.0 * hder(6) / 967680.0;
  const double tail = hder(0) - hder(2) / 24.0 + 7.0 * hder(4) / 5760.0 - h6;
  return {node_part + trig * (rest + tail), trig * std::abs(h6), last - first + 1};
}

}  // namespace extremal::detail
