#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/measures.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace extremal;
namespace fx = extremal::fixtures;

TEST_CASE("admissibility classes") {
  CHECK(classify(MeasureSpec::haar()) == Admissibility::Cond31);
  CHECK(classify(MeasureSpec::power(0.5)) == Admissibility::Cond31);
  CHECK(classify(MeasureSpec::power(1.5)) == Admissibility::Cond47);
  CHECK(classify(MeasureSpec::atomic({{1.0, 1.0}})) == Admissibility::Cond47);
  CHECK(MeasureSpec::power(1.0).is_haar());
  CHECK_THROWS(MeasureSpec::power(2.5));
  CHECK_THROWS(MeasureSpec::atomic({{-1.0, 1.0}}));
}

TEST_CASE("f_mu closed forms") {
  CHECK(f_mu(MeasureSpec::haar(), 3.0).value() == doctest::Approx(-std::log(3.0)).epsilon(1e-15));
  CHECK(f_mu(MeasureSpec::haar(), 0.0).is_infinite());
  CHECK(f_mu(MeasureSpec::power(0.5), 2.0).value() == doctest::Approx(fx::kPowerHalfFAt2).epsilon(1e-13));
  CHECK(f_mu(MeasureSpec::power(1.5), 0.0).is_finite());
  const auto at = MeasureSpec::atomic({{0.5, 1.0}, {2.0, 0.25}});
  const double x = 1.3;
  CHECK(f_mu(at, x).value() == doctest::Approx(std::exp(-0.5 * x) - std::exp(-0.5) + 0.25 * (std::exp(-2.0 * x) - std::exp(-2.0))).epsilon(1e-15));
}

TEST_CASE("f_mu is even and f_mu' matches a central difference") {
  auto g = gen::engine(5);
  for (const auto& m : {MeasureSpec::haar(), MeasureSpec::power(0.5), MeasureSpec::power(1.5)}) {
    for (int i = 0; i < 50; ++i) {
      const double x = gen::uniform(g, 0.2, 20.0), h = 1e-5 * x;
      CHECK(f_mu(m, x) == f_mu(m, -x));
      const double fd = (f_mu(m, x + h).value() - f_mu(m, x - h).value()) / (2 * h);
      CHECK(f_mu_prime(m, x) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("dilation identity f_nu(delta x) = f_mu(x) - f_mu(1/delta)") {
  auto g = gen::engine(6);
  for (const auto& m : {MeasureSpec::haar(), MeasureSpec::power(0.5), MeasureSpec::power(1.5),
                        MeasureSpec::atomic({{0.5, 1.0}, {2.0, 0.25}})}) {
    for (int i = 0; i < 50; ++i) {
      const double delta = gen::log_uniform(g, 0.1, 10.0), x = gen::uniform(g, 0.05, 20.0);
      const MeasureSpec nu = dilate(m, delta);
      const double lhs = f_mu(nu, delta * x).value(), rhs = f_mu(m, x).value() - f_mu(m, 1.0 / delta).value();
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
  CHECK(dilate(MeasureSpec::haar(), 3.0).is_haar());
}

TEST_CASE("gap integrals against closed forms") {
  for (const auto& s : fx::kLowerConstantPower)
    CHECK(minorant_gap_integral(MeasureSpec::power(s.arg), 1.0) == doctest::Approx(s.value).epsilon(1e-9));
  for (const auto& s : fx::kUpperConstantPower)
    CHECK(majorant_gap_integral(MeasureSpec::power(s.arg), 1.0) == doctest::Approx(s.value).epsilon(1e-9));
  CHECK(minorant_gap_integral(MeasureSpec::haar(), 1.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-10));
  CHECK_THROWS_AS(majorant_gap_integral(MeasureSpec::haar(), 1.0), AdmissibilityError);
}

TEST_CASE("Lorentz integral of Haar measure") {
  for (double t : {0.3, 1.0, 2.5}) CHECK(lorentz_integral(MeasureSpec::haar(), t) == doctest::Approx(1 / (2 * t)));
}

TEST_CASE("measure CSV parsing") {
  const std::string path = "measure_test.csv";
  {
    std::ofstream f(path);
    f << "lambda,weight\n0.5,1\n2,0.25\n";
  }
  const auto rows = read_measure_csv(path);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].first == 2.0);
  CHECK(rows[1].second == 0.25);
  {
    std::ofstream f(path);
    f << "lambda,weight\n2,1\n1,0.25\n";
  }
  CHECK_THROWS_WITH_AS(read_measure_csv(path), doctest::Contains(":3"), std::invalid_argument);
  {
    std::ofstream f(path);
    f << "x,y\n1,1\n";
  }
  CHECK_THROWS_AS(read_measure_csv(path), std::invalid_argument);
  std::remove(path.c_str());
}
