#pragma once
// Whole-line integrals of even functions of the form T(x)·Ψ(x)/π², where
// T = cos²(πx) or sin²(πx) and Ψ is smooth with algebraic decay.  The part on
// [0, X] is integrated cell by cell; the tail uses a least-squares fit of Ψ in
// {(X/x)^p, (X/x)^p log(x/X)} and closed-form or asymptotic tail integrals.

#include <functional>

namespace extremal::detail {

enum class TrigFactor { Cos2, Sin2 };

struct LineIntegral {
  double value;
  double head;
  double tail;
  double fit_residual;  // max residual of the Ψ fit, in units of Ψ
};

// 2∫_0^∞ f(x) cos(2πtx) dx for an even f.
LineIntegral even_line_integral(const std::function<double(double)>& f, TrigFactor factor, double t = 0.0,
                                double X = 100.5);

}  // namespace extremal::detail
