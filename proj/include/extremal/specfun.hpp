#pragma once

namespace extremal {

struct ZetaGamma {
  double s;
  double value;
  double abs_err;
};

// 2/λ − csch(λ/2), the L¹ gap of the exponential minorant.  λ > 0.
double defect_minorant(double lambda);
// coth(λ/2) − 2/λ, the L¹ gap of the exponential majorant.  λ > 0.
double defect_majorant(double lambda);

// Riemann zeta on (−1, 2) \ {1}.
ZetaGamma zeta_eval(double s);
double zeta(double s);

// Gamma on (−1, ∞) \ {0}, finite up to the double overflow near 171.6.
ZetaGamma gamma_eval(double s);
double gamma(double s);

namespace detail {
// Branches of the defect functions, exposed for the branch-overlap tests.
double defect_minorant_taylor(double lambda);
double defect_minorant_series(double lambda);
double defect_minorant_direct(double lambda);
double defect_majorant_taylor(double lambda);
double defect_majorant_series(double lambda);
double defect_majorant_direct(double lambda);
}  // namespace detail

}  // namespace extremal
