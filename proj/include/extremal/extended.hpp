#pragma once

#include <cmath>
#include <string>

namespace extremal {

// Real number or +infinity.  Infinity is a tag, never an overflowed double.
class Extended {
 public:
  constexpr Extended() = default;
  constexpr Extended(double v) : value_(v) {}  // NOLINT: implicit on purpose
  static constexpr Extended infinity() {
    Extended e;
    e.inf_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  // Throws DomainError when infinite.
  double value() const;
  // Finite value, or HUGE_VAL for the sentinel.  For plotting/serialization.
  double as_double() const { return inf_ ? HUGE_VAL : value_; }

  std::string to_string() const;

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

 private:
  double value_ = 0.0;
  bool inf_ = false;
};

}  // namespace extremal
