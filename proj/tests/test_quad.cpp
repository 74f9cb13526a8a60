#include <cmath>
#include <numbers>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/quad.hpp"
#include "gen.hpp"

using namespace extremal;

TEST_CASE("finite integrals") {
  CHECK(integrate_finite([](double x) { return x * x; }, 0.0, 1.0).value == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-13));
  // endpoint log singularity
  const auto r = integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r.value + 1.0) < 1e-11);
  CHECK(r.abs_err_est <= 1e-12);
  CHECK(r.evaluations > 0);
}

TEST_CASE("intervals must be proper") {
  CHECK(integrate_finite([](double) { return 1.0; }, 0.0, 1.0).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, HUGE_VAL), DomainError);
}

TEST_CASE("polynomials up to degree 20 on random intervals") {
  auto g = gen::engine(3);
  for (int i = 0; i < 200; ++i) {
    const int k = gen::integer(g, 0, 20);
    const double a = gen::uniform(g, -2, 0), b = gen::uniform(g, 0, 2);
    const double exact = (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
    // tolerance relative to ∫|f|: odd k on near-symmetric intervals cancels
    const double mass = (std::pow(-a, k + 1) + std::pow(b, k + 1)) / (k + 1);
    const double v = integrate_finite([k](double x) { return std::pow(x, k); }, a, b, 1e-13 * mass).value;
    CHECK(std::abs(v - exact) <= 1e-12 * mass);
  }
}

TEST_CASE("budget exhaustion reports the best estimate") {
  QuadOptions opt;
  opt.tol = 1e-14;
  opt.max_evals = 60;
  try {
    integrate_finite([](double x) { return std::sin(1.0 / x); }, 1e-3, 1.0, opt);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.best_estimate));
    CHECK(e.abs_err > opt.tol);
  }
}

TEST_CASE("non-finite integrand values are rejected") {
  CHECK_THROWS_AS(integrate_finite([](double) { return std::nan(""); }, 0.0, 1.0), DomainError);
}

TEST_CASE("integrals against measures") {
  // ∫ (e^{−λ} − e^{−2λ}) dλ/λ = log 2
  const auto h = integrate_measure([](double l) { return std::exp(-l) - std::exp(-2 * l); }, MeasureSpec::haar());
  CHECK(h.value == doctest::Approx(std::numbers::ln2).epsilon(1e-10));
  // ∫ e^{−λ} λ^{−1/2} dλ = √π
  const auto p = integrate_measure([](double l) { return std::exp(-l); }, MeasureSpec::power(0.5));
  CHECK(p.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
  // ∫ (1 − e^{−λ}) λ^{−3/2} dλ = 2√π
  const auto q = integrate_measure([](double l) { return -std::expm1(-l); }, MeasureSpec::power(1.5));
  CHECK(q.value == doctest::Approx(2 * std::sqrt(std::numbers::pi)).epsilon(1e-10));
  const auto a = integrate_measure([](double l) { return l * l; }, MeasureSpec::atomic({{1.0, 2.0}, {3.0, 0.5}}));
  CHECK(a.value == doctest::Approx(6.5));
}

TEST_CASE("divergent measure integrals are detected") {
  CHECK_THROWS_AS(integrate_measure([](double) { return 1.0; }, MeasureSpec::haar()), DivergenceError);
  CHECK_THROWS_AS(integrate_measure([](double l) { return std::exp(-l); }, MeasureSpec::haar()), DivergenceError);
}
