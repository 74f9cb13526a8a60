#include <cmath>
#include <numbers>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/exp_kernel.hpp"
#include "gen.hpp"

using namespace extremal;

TEST_CASE("L and M interpolate at half-integers and integers") {
  for (double l : {0.05, 0.7, 3.0, 25.0}) {
    for (int n = 0; n < 30; ++n) {
      const double xh = n + 0.5;
      CHECK(eval_L(l, xh).value == doctest::Approx(std::exp(-l * xh)).epsilon(1e-14));
      CHECK(eval_M(l, n).value == doctest::Approx(std::exp(-l * n)).epsilon(1e-14));
    }
  }
}

TEST_CASE("sandwich on random points") {
  auto g = gen::engine(7);
  for (int i = 0; i < 5000; ++i) {
    const double l = gen::log_uniform(g, 0.02, 50.0), x = gen::uniform(g, -60.0, 60.0);
    REQUIRE(minorant_gap(l, x) >= -1e-13);
    REQUIRE(majorant_gap(l, x) >= -1e-13);
  }
}

TEST_CASE("evenness is exact") {
  auto g = gen::engine(8);
  for (int i = 0; i < 500; ++i) {
    const double l = gen::log_uniform(g, 0.05, 20.0), x = gen::uniform(g, 0.0, 30.0);
    CHECK(eval_L(l, x).value == eval_L(l, -x).value);
    CHECK(eval_M(l, x).value == eval_M(l, -x).value);
  }
}

TEST_CASE("gap functions agree with value differences") {
  for (double l : {0.3, 2.0})
    for (double x : {0.1, 1.7, 9.2}) {
      CHECK(minorant_gap(l, x) == doctest::Approx(std::exp(-l * x) - eval_L(l, x).value).epsilon(1e-10));
      CHECK(majorant_gap(l, x) == doctest::Approx(eval_M(l, x).value - std::exp(-l * x)).epsilon(1e-10));
    }
}

TEST_CASE("evaluation metadata") {
  const auto e = eval_L(1.0, 2.3);
  CHECK(e.lambda == 1.0);
  CHECK(e.x == 2.3);
  CHECK(e.trunc_terms > 0);
  CHECK(e.tail_bound >= 0.0);
  CHECK(e.tail_bound < 1e-12);
  CHECK(detail::kernel_extra_terms(1e-6) == 50);
}

TEST_CASE("transforms: values at 0, support and decay") {
  for (double l : {0.1, 1.0, 7.0}) {
    CHECK(eval_Lhat(l, 0.0).value == doctest::Approx(1.0 / std::sinh(l / 2)).epsilon(1e-14));
    CHECK(eval_Mhat(l, 0.0).value == doctest::Approx(1.0 / std::tanh(l / 2)).epsilon(1e-14));
    for (double t : {1.0, -1.0, 1.5, 40.0}) {
      CHECK(eval_Lhat(l, t).value == 0.0);
      CHECK(eval_Mhat(l, t).value == 0.0);
    }
  }
  auto g = gen::engine(9);
  for (int i = 0; i < 2000; ++i) {
    const double l = gen::log_uniform(g, 1e-3, 700.0), t = gen::uniform(g, -1.0, 1.0);
    const double a = eval_Lhat(l, t).value, b = eval_Mhat(l, t).value;
    REQUIRE(std::isfinite(a));
    REQUIRE(std::isfinite(b));
    CHECK(a >= 0.0);
    CHECK(b >= 0.0);
    CHECK(a <= 2 * l / (l * l + 4 * std::numbers::pi * std::numbers::pi * t * t) * (1 + 1e-13));
  }
}

TEST_CASE("Haar integral of the transform") {
  CHECK(lhat_haar_integral(1.0) == 0.0);
  CHECK(lhat_haar_integral(0.5) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(lhat_haar_integral(-0.5) == doctest::Approx(lhat_haar_integral(0.5)));
  CHECK_THROWS_AS(lhat_haar_integral(0.0), DomainError);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(eval_L(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(eval_M(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(eval_L(1.0, std::nan("")), DomainError);
  CHECK_THROWS_AS(eval_Lhat(std::nan(""), 0.1), DomainError);
}
