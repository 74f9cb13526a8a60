#include "extremal/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "extremal/numfmt.hpp"

namespace extremal {

std::vector<double> linspace(double a, double b, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {a};
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = a + (b - a) * (static_cast<double>(i) / (n - 1));
  xs.back() = b;
  return xs;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("grid must look like a:b:n, got '" + text + "'");
  const std::string_view v(text);
  const double a = parse_double(v.substr(0, c1));
  const double b = parse_double(v.substr(c1 + 1, c2 - c1 - 1));
  const double n = parse_double(v.substr(c2 + 1));
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("grid endpoints must be finite");
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e8) throw std::invalid_argument("grid count must be a positive integer");
  if (n > 1.0 && !(a < b)) throw std::invalid_argument("grid needs a < b");
  return linspace(a, b, static_cast<std::size_t>(n));
}

}  // namespace extremal
