#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/forms.hpp"
#include "extremal/specfun.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace extremal;
namespace fx = extremal::fixtures;

TEST_CASE("point sets must be separated") {
  CHECK_NOTHROW(PointSet({0.0, 1.0, 2.5}, 1.0));
  CHECK_THROWS(PointSet({0.0, 0.5}, 1.0));
  CHECK_THROWS(PointSet({0.0, 1.0}, 0.0));
}

TEST_CASE("two-point Haar form") {
  for (double delta : {0.5, 1.0, 3.0}) {
    const PointSet pts({0.0, delta}, delta);
    const Coeffs a{{1.0, 0.0}, {-1.0, 0.0}};
    CHECK(evaluate_form(MeasureSpec::haar(), pts, a) == doctest::Approx(-1.0 / delta));
  }
}

TEST_CASE("serial and parallel forms are identical") {
  auto g = gen::engine(31);
  for (const auto& m : {MeasureSpec::haar(), MeasureSpec::power(0.5), MeasureSpec::atomic({{1.0, 1.0}})}) {
    const PointSet pts = random_point_set(g, 400, 0.8);
    const Coeffs a = random_coeffs(g, 400);
    CHECK(evaluate_form(m, pts, a) == evaluate_form_serial(m, pts, a));
  }
}

TEST_CASE("lower and upper bounds on random configurations") {
  auto g = gen::engine(32);
  const std::vector<MeasureSpec> fams{MeasureSpec::haar(), MeasureSpec::power(0.5), MeasureSpec::power(1.5),
                                      MeasureSpec::atomic({{0.5, 1.0}, {3.0, 0.25}})};
  for (const auto& m : fams) {
    for (int i = 0; i < 40; ++i) {
      const double delta = gen::uniform(g, 0.3, 3.0);
      const std::size_t n = static_cast<std::size_t>(gen::integer(g, 2, 40));
      const PointSet pts = random_point_set(g, n, delta);
      const Coeffs a = random_coeffs(g, n);
      const auto lo = verify_form(m, pts, a, WitnessKind::Lower);
      CHECK(lo.slack >= -1e-9 * norm2(a));
      if (classify(m) == Admissibility::Cond47) {
        const auto hi = verify_form(m, pts, a, WitnessKind::Upper);
        CHECK(hi.slack >= -1e-9 * norm2(a));
      }
    }
  }
}

TEST_CASE("constants") {
  CHECK(lower_constant_A(MeasureSpec::haar(), 2.0) == doctest::Approx(std::numbers::ln2 / 2).epsilon(1e-10));
  for (const auto& s : fx::kLowerConstantPower)
    CHECK(lower_constant_A(MeasureSpec::power(s.arg), 1.0) == doctest::Approx(s.value).epsilon(1e-9));
  for (const auto& s : fx::kUpperConstantPower)
    CHECK(upper_constant_B(MeasureSpec::power(s.arg), 1.0) == doctest::Approx(s.value).epsilon(1e-9));
  CHECK_THROWS_AS(upper_constant_B(MeasureSpec::haar(), 1.0), AdmissibilityError);
  CHECK(r_mu(MeasureSpec::haar(), 0.0).is_infinite());
  CHECK(r_mu(MeasureSpec::haar(), 2.0).value() == doctest::Approx(0.25));
}

TEST_CASE("HLS constants: both routes agree") {
  for (double sigma : {0.25, 0.5, 0.75, 1.25, 1.5, 1.75}) {
    for (double delta : {0.5, 1.0, 2.0}) {
      const auto a = hls_constants(sigma, delta), b = hls_constants_via_measure(sigma, delta);
      CHECK(a.lower == doctest::Approx(b.lower).epsilon(1e-11));
      CHECK(a.upper.has_value() == (sigma > 1.0));
      if (a.upper) CHECK(*a.upper == doctest::Approx(*b.upper).epsilon(1e-11));
      CHECK_FALSE(a.continuity_extension);
    }
  }
  CHECK(hls_constants(1.0, 1.0).lower == doctest::Approx(std::log(4.0)).epsilon(1e-14));
  const auto two = hls_constants(2.0, 1.0);
  CHECK(two.continuity_extension);
  CHECK(two.lower == doctest::Approx(std::numbers::pi * std::numbers::pi / 6));
  CHECK(*two.upper == doctest::Approx(std::numbers::pi * std::numbers::pi / 3));
  CHECK_THROWS(hls_constants(0.0, 1.0));
  CHECK_THROWS(hls_constants(2.5, 1.0));
}

TEST_CASE("sharpness witness") {
  const auto h = MeasureSpec::haar();
  double prev = 0.0;
  for (int N : {1, 2, 5, 20, 100, 500}) {
    const double w = sharpness_witness(h, 1.0, N, WitnessKind::Lower);
    CHECK(w <= std::numbers::ln2 + 1e-12);
    CHECK(w >= prev - 1e-15);
    prev = w;
  }
  CHECK(sharpness_witness(h, 1.0, 0, WitnessKind::Lower) == 0.0);
  CHECK_THROWS_AS(sharpness_witness(h, 1.0, 5, WitnessKind::Upper), AdmissibilityError);
  const auto p = MeasureSpec::power(1.5);
  CHECK(sharpness_witness(p, 1.0, 500, WitnessKind::Upper) <= upper_constant_B(p, 1.0));
}

TEST_CASE("points CSV parsing") {
  const std::string path = "points_test.csv";
  {
    std::ofstream f(path);
    f << "xi,re,im\n0,1,0\n1.5,-1,0.5\n";
  }
  const auto pc = read_points_csv(path);
  CHECK(pc.xi.size() == 2);
  CHECK(pc.a[1] == std::complex<double>(-1.0, 0.5));
  {
    std::ofstream f(path);
    f << "xi,re,im\n0,1,0\n1.5,oops,0\n";
  }
  CHECK_THROWS_WITH_AS(read_points_csv(path), doctest::Contains(":3"), std::invalid_argument);
  std::remove(path.c_str());
}
