#pragma once

#include <complex>
#include <vector>

#include "extremal/extended.hpp"
#include "extremal/measures.hpp"

namespace extremal {

// Real trigonometric polynomial Σ_{|n|≤N} c(n) e(nx), c(−n) = conj c(n).
class TrigPoly {
 public:
  TrigPoly() = default;
  // c(0..N); the negative half is implied.
  static TrigPoly from_nonnegative(std::vector<std::complex<double>> c);
  // c(−N..N); rejects coefficient lists that are not conjugate symmetric.
  static TrigPoly from_full(const std::vector<std::complex<double>>& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::complex<double> coeff(int n) const;
  double mean() const { return c_.empty() ? 0.0 : c_[0].real(); }
  double operator()(double x) const;
  TrigPoly operator-() const;

 private:
  std::vector<std::complex<double>> c_;  // c(0..N)
};

// x − floor(x) and the distance to the nearest integer.
double frac(double x);
double dist_to_int(double x);

// p(λ,x) = Σ_m e^{−λ|x+m|} − 2/λ.
double eval_p(double lambda, double x);
// ∂p/∂x, zero at the integers.
double eval_j(double lambda, double x);

// Extremal minorant / majorant of p(λ,·) of degree N.
TrigPoly trig_minorant_l(double lambda, int N);
TrigPoly trig_majorant_m(double lambda, int N);

// q_μ(x) = ∫ p(λ,x) dμ(λ).
Extended q_mu(const MeasureSpec& measure, double x);
// q̂_μ(n): 0 for n = 0, r_μ(n) otherwise.
double q_mu_coefficient(const MeasureSpec& measure, int n);

// Extremal minorant g_μ(N;·) (Cond31) and majorant h_μ(N;·) (Cond47) of q_μ.
TrigPoly trig_minorant_g(const MeasureSpec& measure, int N, double tol = 1e-12);
TrigPoly trig_majorant_h(const MeasureSpec& measure, int N, double tol = 1e-12);
// u_N = −g for the Haar measure: majorant of log|2 sin πx| with mean log2/(N+1).
TrigPoly trig_log_majorant_u(int N, double tol = 1e-12);

}  // namespace extremal
