#include "extremal/trig_io.hpp"

#include <sstream>
#include <stdexcept>

#include "extremal/numfmt.hpp"
#include "json.hpp"

namespace extremal {

std::string to_csv(const TrigPoly& p) {
  std::string out = "n,re,im\n";
  for (int n = -p.degree(); n <= p.degree(); ++n) {
    const auto c = p.coeff(n);
    out += std::to_string(n) + "," + format_double(c.real()) + "," + format_double(c.imag()) + "\n";
  }
  return out;
}

TrigPoly trig_poly_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,re,im", 0) != 0)
    throw std::invalid_argument("trig poly csv:1: header must be n,re,im");
  std::vector<std::complex<double>> c;
  int lineno = 1, expect = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto a = line.find(','), b = line.find(',', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw std::invalid_argument("trig poly csv:" + std::to_string(lineno) + ": expected three columns");
    const std::string_view v(line);
    const int n = static_cast<int>(parse_double(v.substr(0, a)));
    if (first) expect = n, first = false;
    if (n != expect) throw std::invalid_argument("trig poly csv:" + std::to_string(lineno) + ": rows must run -N..N");
    ++expect;
    c.emplace_back(parse_double(v.substr(a + 1, b - a - 1)), parse_double(v.substr(b + 1)));
  }
  return TrigPoly::from_full(c);
}

std::string to_json(const TrigPoly& p) {
  nlohmann::ordered_json j;
  j["degree"] = p.degree();
  j["coeffs"] = nlohmann::ordered_json::array();
  for (int n = -p.degree(); n <= p.degree(); ++n) {
    const auto c = p.coeff(n);
    j["coeffs"].push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  }
  return j.dump(2) + "\n";
}

TrigPoly trig_poly_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int N = j.at("degree").get<int>();
  const auto& arr = j.at("coeffs");
  if (arr.size() != static_cast<std::size_t>(2 * N + 1)) throw std::invalid_argument("trig poly json: expected 2N+1 coefficients");
  std::vector<std::complex<double>> c(2 * N + 1);
  for (const auto& e : arr) {
    const int n = e.at("n").get<int>();
    if (n < -N || n > N) throw std::invalid_argument("trig poly json: index out of range");
    c[n + N] = {e.at("re").get<double>(), e.at("im").get<double>()};
  }
  return TrigPoly::from_full(c);
}

}  // namespace extremal
