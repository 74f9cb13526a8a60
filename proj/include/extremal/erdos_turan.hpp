#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace extremal {

using RootSet = std::vector<std::complex<double>>;

// |α| ≤ 1 kept, |α| > 1 replaced by 1/conj(α).
RootSet reflect_roots(const RootSet& alpha);

struct EtBound {
  int N;
  int M;
  double bound;
  std::vector<double> power_sums;  // |Σ β_m^n|, n = 1..N
  double logplus_sum;
};

// Σ log⁺|α| + M log2/(N+1) + Σ_{n≤N} |Σ β^n|/n.
EtBound et_bound(const RootSet& alpha, int N);

// Σ log|e(x) − α_m|, −inf at a root.
double log_abs_on_circle(const RootSet& alpha, double x);

// Max of log|F(e(x))| over a uniform grid of `samples` points, polished by
// golden-section search around the best cell.  A lower estimate of the sup
// of log|F| over the closed disk.
double sup_log_oracle(const RootSet& alpha, std::size_t samples = 65536);
double sup_log_oracle_serial(const RootSet& alpha, std::size_t samples = 65536);

// |Σ log⁺|α| − ∫_0^1 log|F(e(x))| dx|.  Throws ConditioningError for roots
// within 1e−9 of the unit circle.
double jensen_check(const RootSet& alpha, double tol = 1e-10);

// `re,im` rows with a header.
RootSet read_roots_csv(const std::string& path);

// M roots uniform in the disk of radius r.
RootSet random_roots(std::mt19937_64& rng, std::size_t M, double r);

}  // namespace extremal
