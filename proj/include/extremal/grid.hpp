#pragma once

#include <string>
#include <vector>

namespace extremal {

// "a:b:n" → n points from a to b inclusive.
std::vector<double> parse_grid(const std::string& text);
std::vector<double> linspace(double a, double b, std::size_t n);

// out[i] = f(xs[i]).  Independent points, so the parallel and serial
// versions produce identical arrays.
template <class F>
std::vector<double> map_parallel(const std::vector<double>& xs, const F& f) {
  std::vector<double> out(xs.size());
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) out[i] = f(xs[i]);
  return out;
}

template <class F>
std::vector<double> map_serial(const std::vector<double>& xs, const F& f) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
  return out;
}

}  // namespace extremal
