#include "extremal/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/extended.hpp"

namespace extremal {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

double Extended::value() const {
  if (inf_) throw DomainError("value requested from the +infinity sentinel");
  return value_;
}

std::string Extended::to_string() const { return inf_ ? "+inf" : format_double(value_); }

}  // namespace extremal
