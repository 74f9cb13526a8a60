#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extremal/extended.hpp"
#include "extremal/measures.hpp"

namespace extremal {

// Distinct reals with pairwise separation at least delta.
class PointSet {
 public:
  PointSet(std::vector<double> xi, double delta);
  const std::vector<double>& xi() const { return xi_; }
  double delta() const { return delta_; }
  std::size_t size() const { return xi_.size(); }

 private:
  std::vector<double> xi_;
  double delta_;
};

// r_μ(t) = ∫ 2λ/(λ² + 4π²t²) dμ(λ); +∞ at t = 0.
Extended r_mu(const MeasureSpec& measure, double t);
// A(δ,μ), the sharp lower constant.
double lower_constant_A(const MeasureSpec& measure, double delta);
// B(δ,μ), the sharp upper constant; Cond47 only.
double upper_constant_B(const MeasureSpec& measure, double delta);

using Coeffs = std::vector<std::complex<double>>;

// Σ_{m≠n} a_m conj(a_n) r_μ(ξ_m − ξ_n).  Rows are distributed over OpenMP
// threads; each row is summed in index order and rows are added in index
// order, so the result does not depend on the thread count.
double evaluate_form(const MeasureSpec& measure, const PointSet& points, const Coeffs& a);
// Single-threaded reference with the same summation order.
double evaluate_form_serial(const MeasureSpec& measure, const PointSet& points, const Coeffs& a);
// Same sums with a precomputed kernel r(t).
double evaluate_form_kernel(double (*r)(double, const void*), const void* ctx, const PointSet& points,
                            const Coeffs& a, bool parallel);

struct HlsConstants {
  double sigma;
  double delta;
  double lower;                 // −lower·Σ|a|² ≤ form
  std::optional<double> upper;  // form ≤ upper·Σ|a|², 1 < σ ≤ 2
  bool continuity_extension;    // σ = 2
};

// Sharp constants for the kernel |ξ_m − ξ_n|^{−σ}, 0 < σ ≤ 2, from ζ(σ).
HlsConstants hls_constants(double sigma, double delta);
// The same constants from A, B of the power measure via Γ(1−σ)ζ(1−σ).
HlsConstants hls_constants_via_measure(double sigma, double delta);

enum class WitnessKind { Lower, Upper };

// Rayleigh quotient of the alternating (lower) or constant (upper) vector on
// ξ_n = δn, n = 0..N; tends to A(δ,μ) resp. B(δ,μ) from below.
double sharpness_witness(const MeasureSpec& measure, double delta, int N, WitnessKind kind);

struct FormVerdict {
  double bound;
  double form_value;
  double slack;
  double witness_ratio;
};

FormVerdict verify_form(const MeasureSpec& measure, const PointSet& points, const Coeffs& a, WitnessKind kind);

double norm2(const Coeffs& a);

// count points starting at 0 with gaps δ(1 + Exp(1)).
PointSet random_point_set(std::mt19937_64& rng, std::size_t count, double delta);
// Independent standard complex normal coefficients.
Coeffs random_coeffs(std::mt19937_64& rng, std::size_t count);

struct PointsAndCoeffs {
  std::vector<double> xi;
  Coeffs a;
};
// `xi,re,im` rows with a header.
PointsAndCoeffs read_points_csv(const std::string& path);

}  // namespace extremal
