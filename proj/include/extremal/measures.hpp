#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "extremal/extended.hpp"

namespace extremal {

// scale·λ^{-1} dλ
struct HaarLog {
  double scale = 1.0;
};

// scale·λ^{-σ} dλ, σ ∈ (0,2) \ {1}
struct PowerLaw {
  double sigma;
  double scale = 1.0;
};

// Σ w_i δ_{λ_i}
struct Atomic {
  std::vector<std::pair<double, double>> atoms;  // (lambda, weight)
};

// w(λ) dλ with a user supplied nonnegative density
struct Weight {
  std::function<double(double)> density;
  std::string name;
};

enum class Admissibility { Cond31, Cond47 };

class MeasureSpec {
 public:
  using Family = std::variant<HaarLog, PowerLaw, Atomic, Weight>;

  static MeasureSpec haar(double scale = 1.0);
  // σ = 1 yields the Haar measure.
  static MeasureSpec power(double sigma, double scale = 1.0);
  static MeasureSpec atomic(std::vector<std::pair<double, double>> atoms);
  static MeasureSpec weight(std::function<double(double)> density, std::string name = "weight");

  const Family& family() const { return family_; }
  bool is_haar() const { return std::holds_alternative<HaarLog>(family_); }
  // Short human readable tag, e.g. "haar", "power:1.5", "atomic[3]".
  std::string describe() const;

 private:
  explicit MeasureSpec(Family f) : family_(std::move(f)) {}
  Family family_;
};

// Throws AdmissibilityError if neither moment condition holds.
Admissibility classify(const MeasureSpec& measure);
const char* to_string(Admissibility a);

// f_μ(x) = ∫ (e^{-λ|x|} − e^{-λ}) dμ(λ).
Extended f_mu(const MeasureSpec& measure, double x);
// f'_μ(x), x ≠ 0.
double f_mu_prime(const MeasureSpec& measure, double x);
// f_μ^{(j)}(b) for j = 0..out.size()-1 and b > 0.
void f_mu_derivatives(const MeasureSpec& measure, double b, std::span<double> out);

// ν(E) = μ(δE).
MeasureSpec dilate(const MeasureSpec& measure, double delta);

// ∫ 2λ/(λ² + 4π²t²) dμ(λ) for t ≠ 0.
double lorentz_integral(const MeasureSpec& measure, double t);
// ∫ (2/λ − csch(λ/2δ)/δ) dμ(λ).
double minorant_gap_integral(const MeasureSpec& measure, double delta);
// ∫ (coth(λ/2δ)/δ − 2/λ) dμ(λ); Cond47 only.
double majorant_gap_integral(const MeasureSpec& measure, double delta);

// Reads `lambda,weight` rows (header required, λ strictly increasing).
std::vector<std::pair<double, double>> read_measure_csv(const std::string& path);
// Step density: w_i on [λ_i, λ_{i+1}), zero outside [λ_0, λ_last).
MeasureSpec weight_from_table(std::vector<std::pair<double, double>> rows, std::string name);

}  // namespace extremal
