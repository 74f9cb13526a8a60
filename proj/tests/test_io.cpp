#include <bit>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "extremal/extended.hpp"
#include "extremal/grid.hpp"
#include "extremal/numfmt.hpp"
#include "extremal/report.hpp"
#include "gen.hpp"

using namespace extremal;

TEST_CASE("shortest round-trip formatting") {
  auto g = gen::engine(51);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int i = 0; i < 20000; ++i) {
    const double v = std::bit_cast<double>(bits(g));
    if (!std::isfinite(v)) continue;
    REQUIRE(std::bit_cast<std::uint64_t>(parse_double(format_double(v))) == std::bit_cast<std::uint64_t>(v));
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(HUGE_VAL) == "inf");
  CHECK(format_double(-HUGE_VAL) == "-inf");
}

TEST_CASE("strict parsing") {
  CHECK(parse_double(" +2.5 ") == 2.5);
  CHECK(parse_double("-1e-3") == -1e-3);
  CHECK_THROWS_AS(parse_double("1.0x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
}

TEST_CASE("grids") {
  const auto g = parse_grid("-1:1:5");
  REQUIRE(g.size() == 5);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 1.0);
  CHECK(g[2] == 0.0);
  CHECK(parse_grid("3:3:1").size() == 1);
  CHECK_THROWS(parse_grid("0:1"));
  CHECK_THROWS(parse_grid("0:1:0"));
  CHECK_THROWS(parse_grid("a:1:3"));
  const auto xs = linspace(0.0, 1.0, 101);
  CHECK(map_parallel(xs, [](double x) { return std::sin(x); }) == map_serial(xs, [](double x) { return std::sin(x); }));
}

TEST_CASE("extended reals") {
  CHECK(Extended::infinity().to_string() == "+inf");
  CHECK(Extended(0.25).to_string() == "0.25");
  CHECK_THROWS(Extended::infinity().value());
  CHECK(Extended::infinity() == Extended::infinity());
  CHECK_FALSE(Extended(1.0) == Extended::infinity());
}

TEST_CASE("report JSON") {
  RunReport r;
  r.command = "verify";
  r.seed = 3;
  r.checks.push_back({"a", true, 1.0, 1.0, 0.0, ""});
  r.checks.push_back({"b", false, HUGE_VAL, 0.0, 1e-9, "x"});
  CHECK_FALSE(r.all_pass());
  const auto j = nlohmann::ordered_json::parse(r.to_json());
  CHECK(j["seed"] == 3);
  CHECK(j["checks"][1]["observed"] == "inf");
  CHECK(j["pass"] == false);
}
