#pragma once

#include "extremal/extended.hpp"
#include "extremal/measures.hpp"

namespace extremal {

enum class ApproxKind { Minorant, Majorant };
enum class Strategy { InterpolationSeries, DefectIntegral };

struct SeriesResult {
  double value;
  double abs_err;
  int terms;
};

// G_μ: minorant of f_μ of type 2π interpolating at the half-integers.
double eval_G(const MeasureSpec& measure, double x);
SeriesResult eval_G_series(const MeasureSpec& measure, double x);
// H_μ: majorant of f_μ of type 2π interpolating at the integers; Cond47 only.
double eval_H(const MeasureSpec& measure, double x);
SeriesResult eval_H_series(const MeasureSpec& measure, double x);

// G_ν(δx), H_ν(δx) with ν = dilate(μ, δ); type 2πδ approximations of
// f_μ(x) − f_μ(1/δ).
double eval_G_dilated(const MeasureSpec& measure, double delta, double x);
double eval_H_dilated(const MeasureSpec& measure, double delta, double x);

// U = −G for the Haar measure: the majorant of log|x|.
double eval_U(double x);

struct DefectProfile {
  double x;
  Extended defect;
  double abs_err;
};

// One-sided gap |f_μ(x) − f_μ(1/δ) − approximation(δx)|, computed from the
// series and cross-checked against the λ-integral of the kernel gap.
DefectProfile defect(const MeasureSpec& measure, ApproxKind kind, double delta, double x);
// The λ-integral alone.
double defect_integral(const MeasureSpec& measure, ApproxKind kind, double delta, double x, double tol = 1e-10);

struct EntireApprox {
  MeasureSpec measure;
  ApproxKind kind = ApproxKind::Minorant;
  double delta = 1.0;
  Strategy strategy = Strategy::InterpolationSeries;

  // Validates admissibility and delta; throws on failure.
  EntireApprox(MeasureSpec m, ApproxKind k, double d = 1.0, Strategy s = Strategy::InterpolationSeries);

  // G_ν(δx) or H_ν(δx).  The integral strategy needs f_μ(x) finite.
  double operator()(double x) const;
  // f_μ(x) − f_μ(1/δ), the function being approximated.
  Extended target(double x) const;
};

}  // namespace extremal
