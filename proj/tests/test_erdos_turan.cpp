#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "extremal/erdos_turan.hpp"
#include "extremal/errors.hpp"
#include "gen.hpp"

using namespace extremal;

TEST_CASE("reflection maps exterior roots inside") {
  const RootSet r = reflect_roots({{2.0, 0.0}, {0.0, 0.5}, {0.0, -3.0}});
  CHECK(r[0] == std::complex<double>(0.5, 0.0));
  CHECK(r[1] == std::complex<double>(0.0, 0.5));
  CHECK(std::abs(r[2] - std::complex<double>(0.0, -1.0 / 3)) < 1e-16);
}

TEST_CASE("equality case") {
  const RootSet one{{1.0, 0.0}};
  CHECK(et_bound(one, 0).bound == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
  CHECK(std::abs(sup_log_oracle(one) - std::numbers::ln2) < 1e-12);
}

TEST_CASE("log|P| on the circle") {
  const RootSet a{{2.0, 0.0}, {0.3, 0.4}};
  const double x = 0.137;
  const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * x);
  const double direct = std::log(std::abs((z - a[0]) * (z - a[1])));
  CHECK(log_abs_on_circle(a, x) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("bound dominates the sup oracle") {
  auto g = gen::engine(41);
  for (int i = 0; i < 40; ++i) {
    const RootSet alpha = random_roots(g, static_cast<std::size_t>(gen::integer(g, 1, 20)), 2.0);
    const double sup = sup_log_oracle(alpha, 8192);
    for (int N : {0, 2, 8, 32}) {
      const auto b = et_bound(alpha, N);
      CHECK(b.bound >= sup - 1e-9);
      CHECK(b.power_sums.size() == static_cast<std::size_t>(N));
      CHECK(b.M == static_cast<int>(alpha.size()));
    }
  }
}

TEST_CASE("serial and parallel sup oracles agree") {
  auto g = gen::engine(42);
  const RootSet alpha = random_roots(g, 12, 1.5);
  CHECK(sup_log_oracle(alpha, 4096) == sup_log_oracle_serial(alpha, 4096));
}

TEST_CASE("Jensen") {
  CHECK(jensen_check({{2.0, 0.0}}) < 1e-10);
  CHECK(jensen_check({{0.5, 0.0}}) < 1e-10);
  CHECK(jensen_check({{0.0, 3.0}, {0.2, -0.1}, {-1.2, 0.0}}) < 1e-10);
  CHECK_THROWS_AS(jensen_check({{0.0, 1.0}}), ConditioningError);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(et_bound({}, 3), DomainError);
  CHECK_THROWS_AS(et_bound({{1.0, 0.0}}, -1), DomainError);
}
