#pragma once

namespace extremal {

struct KernelEval {
  double lambda;
  double x;
  double value;
  int trunc_terms;
  double tail_bound;
};

struct KernelTransform {
  double lambda;
  double t;
  double value;
};

// Extremal minorant L(λ,·) and majorant M(λ,·) of e^{-λ|x|}, type 2π.
KernelEval eval_L(double lambda, double x);
KernelEval eval_M(double lambda, double x);

// e^{-λ|x|} − L(λ,x) and M(λ,x) − e^{-λ|x|}, computed without forming the
// difference of nearly equal numbers.
double minorant_gap(double lambda, double x);
double majorant_gap(double lambda, double x);

// Fourier transforms, supported on [-1, 1].
KernelTransform eval_Lhat(double lambda, double t);
KernelTransform eval_Mhat(double lambda, double t);

// ∫_0^∞ L̂(λ,t) λ^{-1} dλ for 0 < |t|; zero for |t| ≥ 1.
double lhat_haar_integral(double t, double tol = 1e-10);

namespace detail {
// Truncation offset used for a single exponential kernel.
int kernel_extra_terms(double lambda);
}  // namespace detail

}  // namespace extremal
