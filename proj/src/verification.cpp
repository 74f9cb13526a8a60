#include "extremal/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "extremal/detail/line_integral.hpp"
#include "extremal/erdos_turan.hpp"
#include "extremal/exp_kernel.hpp"
#include "extremal/forms.hpp"
#include "extremal/grid.hpp"
#include "extremal/numfmt.hpp"
#include "extremal/periodic.hpp"
#include "extremal/specfun.hpp"
#include "extremal/superposed.hpp"

namespace extremal {
namespace {

using json = nlohmann::ordered_json;
using detail::TrigFactor;
constexpr double kPi = std::numbers::pi;

std::mt19937_64 stream(std::uint64_t seed, int criterion) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(criterion)};
  return std::mt19937_64(seq);
}

std::string fmt(double v) { return format_double(v); }

// observed ≥ −tol
void at_least(RunReport& r, std::string name, double observed, double tol, std::string detail = {}) {
  r.checks.push_back({std::move(name), observed >= -tol, observed, 0.0, tol, std::move(detail)});
}

void close_to(RunReport& r, std::string name, double observed, double expected, double tol, std::string detail = {}) {
  const bool ok = std::abs(observed - expected) <= tol;
  r.checks.push_back({std::move(name), ok, observed, expected, tol, std::move(detail)});
}

// observed ≤ tol
void at_most(RunReport& r, std::string name, double observed, double tol, std::string detail = {}) {
  r.checks.push_back({std::move(name), observed <= tol, observed, 0.0, tol, std::move(detail)});
}

double min_of(const std::vector<double>& v) {
  double m = HUGE_VAL;
  for (double x : v) m = std::min(m, x);
  return m;
}

std::vector<std::pair<double, double>> test_atoms() { return {{0.5, 1.0}, {2.0, 0.5}, {7.0, 0.25}}; }

struct NamedMeasure {
  std::string name;
  MeasureSpec m;
};

std::vector<NamedMeasure> test_families() {
  return {{"haar", MeasureSpec::haar()},
          {"power:0.5", MeasureSpec::power(0.5)},
          {"power:1.5", MeasureSpec::power(1.5)},
          {"atomic", MeasureSpec::atomic(test_atoms())}};
}

// 1. L ≤ e^{−λ|x|} ≤ M on grids.
void kernel_sandwich(std::uint64_t, RunReport& r) {
  const auto xs = linspace(-50.0, 50.0, 10000);
  json out = json::array();
  for (double lambda : {0.1, 1.0, 10.0}) {
    const auto lo = map_parallel(xs, [=](double x) { return minorant_gap(lambda, x); });
    const auto hi = map_parallel(xs, [=](double x) { return majorant_gap(lambda, x); });
    const double sl = min_of(lo), sm = min_of(hi);
    at_least(r, "c1.sandwich.L.lambda=" + fmt(lambda), sl, 1e-11);
    at_least(r, "c1.sandwich.M.lambda=" + fmt(lambda), sm, 1e-11);
    out.push_back({{"lambda", lambda}, {"min_slack_L", sl}, {"min_slack_M", sm}, {"points", xs.size()}});
  }
  r.results["kernel_sandwich"] = std::move(out);
}

// 2. ∫(e^{−λ|x|} − L) = 2/λ − csch(λ/2), ∫(M − e^{−λ|x|}) = coth(λ/2) − 2/λ.
void kernel_integrals(std::uint64_t, RunReport& r) {
  json out = json::array();
  for (double lambda : {0.5, 1.0, 3.0}) {
    const auto lo = detail::even_line_integral([=](double x) { return minorant_gap(lambda, x); }, TrigFactor::Cos2);
    const auto hi = detail::even_line_integral([=](double x) { return majorant_gap(lambda, x); }, TrigFactor::Sin2);
    const double el = 2.0 / lambda - 1.0 / std::sinh(lambda / 2.0);
    const double em = 1.0 / std::tanh(lambda / 2.0) - 2.0 / lambda;
    close_to(r, "c2.minorant_defect.lambda=" + fmt(lambda), lo.value, el, 1e-8);
    close_to(r, "c2.majorant_defect.lambda=" + fmt(lambda), hi.value, em, 1e-8);
    out.push_back({{"lambda", lambda},
                   {"minorant", lo.value},
                   {"minorant_tail", lo.tail},
                   {"majorant", hi.value},
                   {"majorant_tail", hi.tail}});
  }
  r.results["kernel_integrals"] = std::move(out);
}

// 3. Numeric Fourier transforms against the closed forms.
void kernel_transforms(std::uint64_t seed, RunReport& r) {
  auto rng = stream(seed, 3);
  std::uniform_real_distribution<double> lam(0.5, 5.0), tt(0.05, 0.95), coin(0.0, 1.0);
  double worst_l = 0.0, worst_m = 0.0;
  json samples = json::array();
  for (int i = 0; i < 20; ++i) {
    const double lambda = lam(rng);
    const double t = (coin(rng) < 0.5 ? -1.0 : 1.0) * tt(rng);
    const double nl =
        detail::even_line_integral([=](double x) { return eval_L(lambda, x).value; }, TrigFactor::Cos2, t).value;
    const double nm =
        detail::even_line_integral([=](double x) { return eval_M(lambda, x).value; }, TrigFactor::Sin2, t).value;
    const double cl = eval_Lhat(lambda, t).value, cm = eval_Mhat(lambda, t).value;
    worst_l = std::max(worst_l, std::abs(nl - cl));
    worst_m = std::max(worst_m, std::abs(nm - cm));
    samples.push_back({{"lambda", lambda}, {"t", t}, {"Lhat_numeric", nl}, {"Lhat", cl}, {"Mhat_numeric", nm}, {"Mhat", cm}});
  }
  at_most(r, "c3.Lhat.max_abs_error", worst_l, 1e-6, "20 random (lambda, t), 0.05 <= |t| <= 0.95");
  at_most(r, "c3.Mhat.max_abs_error", worst_m, 1e-6, "20 random (lambda, t), 0.05 <= |t| <= 0.95");

  double worst_out = 0.0;
  for (double lambda : {1.0, 3.0})
    for (double t : {1.1, 1.5}) {
      const double nl =
          detail::even_line_integral([=](double x) { return eval_L(lambda, x).value; }, TrigFactor::Cos2, t).value;
      const double nm =
          detail::even_line_integral([=](double x) { return eval_M(lambda, x).value; }, TrigFactor::Sin2, t).value;
      worst_out = std::max({worst_out, std::abs(nl), std::abs(nm)});
    }
  at_most(r, "c3.support.max_abs_transform", worst_out, 1e-6, "t in {1.1, 1.5}, lambda in {1, 3}");

  double worst_bound = HUGE_VAL;
  for (double lambda : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0})
    for (double t : linspace(-1.0, 1.0, 41)) {
      const double b = 2.0 * lambda / (lambda * lambda + 4.0 * kPi * kPi * t * t);
      worst_bound = std::min(worst_bound, b - eval_Lhat(lambda, t).value);
    }
  at_least(r, "c3.Lhat_decay_bound.min_slack", worst_bound, 1e-15);
  r.results["kernel_transforms"] = {{"samples", std::move(samples)}, {"min_decay_bound_slack", worst_bound}};
}

// 4. U ≥ log|x|, ∫(U − log|x|) = log 2, transform of the defect.
void log_majorant(std::uint64_t, RunReport& r) {
  const auto xs = linspace(-30.0, 30.0, 6000);
  const auto slack = map_parallel(xs, [](double x) { return x == 0.0 ? HUGE_VAL : eval_U(x) - std::log(std::abs(x)); });
  const double s = min_of(slack);
  at_least(r, "c4.U_majorant.min_slack", s, 1e-9);

  const auto d = [](double x) { return eval_U(x) - std::log(x); };
  const auto total = detail::even_line_integral(d, TrigFactor::Cos2);
  close_to(r, "c4.defect_integral", total.value, std::numbers::ln2, 1e-6);

  json ft = json::array();
  for (double t : {1.0, 1.5, 2.0, 2.5}) {
    const double v = detail::even_line_integral(d, TrigFactor::Cos2, t).value;
    close_to(r, "c4.defect_transform.t=" + fmt(t), v, 1.0 / (2.0 * t), 1e-6);
    ft.push_back({{"t", t}, {"transform", v}});
  }
  for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double v = detail::even_line_integral(d, TrigFactor::Cos2, t).value;
    const double cap = 1.0 / (2.0 * t);
    const double inside = std::min(v, cap - v);
    at_least(r, "c4.defect_transform_range.t=" + fmt(t), inside, 1e-6, "0 <= transform <= 1/(2t)");
    close_to(r, "c4.defect_transform_closed.t=" + fmt(t), v, cap - lhat_haar_integral(t), 1e-6,
             "1/(2t) minus the Haar integral of Lhat");
    ft.push_back({{"t", t}, {"transform", v}});
  }
  r.results["log_majorant"] = {{"min_slack", s}, {"defect_integral", total.value}, {"transforms", std::move(ft)}};
}

// 5. Interpolation series and defect-integral routes agree.
void superposed_routes(std::uint64_t seed, RunReport& r) {
  auto rng = stream(seed, 5);
  std::uniform_real_distribution<double> ux(-10.0, 10.0);
  std::vector<double> xs(50);
  for (auto& x : xs) x = ux(rng);
  json out = json::array();
  for (const auto& fam : test_families()) {
    for (ApproxKind kind : {ApproxKind::Minorant, ApproxKind::Majorant}) {
      if (kind == ApproxKind::Majorant && classify(fam.m) != Admissibility::Cond47) continue;
      const EntireApprox series(fam.m, kind, 1.0, Strategy::InterpolationSeries);
      const EntireApprox integral(fam.m, kind, 1.0, Strategy::DefectIntegral);
      const auto a = map_parallel(xs, [&](double x) { return series(x); });
      const auto b = map_parallel(xs, [&](double x) { return integral(x); });
      double worst = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
      const std::string k = kind == ApproxKind::Minorant ? "G" : "H";
      at_most(r, "c5." + k + "." + fam.name + ".max_route_difference", worst, 1e-7);
      out.push_back({{"measure", fam.name}, {"kind", k}, {"max_difference", worst}});
    }
  }
  r.results["superposed_routes"] = std::move(out);
}

// 6. l ≤ p ≤ m, node equalities, mean values.
void periodic_suite(std::uint64_t seed, RunReport& r) {
  auto rng = stream(seed, 6);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  json out = json::array();
  for (double lambda : {0.2, 1.0, 5.0})
    for (int N : {0, 1, 4, 16}) {
      const TrigPoly l = trig_minorant_l(lambda, N), m = trig_majorant_m(lambda, N);
      std::vector<double> xs = linspace(0.0, 1.0, 4096);
      for (int i = 0; i < 64; ++i) xs.push_back(ux(rng));
      for (int n = 0; n <= N + 1; ++n) {
        xs.push_back((n - 0.5) / (N + 1.0));
        xs.push_back(n / (N + 1.0));
      }
      const auto lo = map_parallel(xs, [&](double x) { return eval_p(lambda, x) - l(x); });
      const auto hi = map_parallel(xs, [&](double x) { return m(x) - eval_p(lambda, x); });
      double node_err = 0.0;
      for (int n = 1; n <= N + 1; ++n) {
        const double xl = (n - 0.5) / (N + 1.0), xm = n / (N + 1.0);
        node_err = std::max({node_err, std::abs(l(xl) - eval_p(lambda, xl)), std::abs(m(xm) - eval_p(lambda, xm))});
      }
      const double a = lambda / (2.0 * N + 2.0);
      const double mean_l = -(2.0 / lambda - 1.0 / std::sinh(a) / (N + 1.0));
      const double mean_m = 1.0 / std::tanh(a) / (N + 1.0) - 2.0 / lambda;
      const std::string tag = ".lambda=" + fmt(lambda) + ".N=" + std::to_string(N);
      at_least(r, "c6.l_below_p" + tag, min_of(lo), 1e-11);
      at_least(r, "c6.m_above_p" + tag, min_of(hi), 1e-11);
      at_most(r, "c6.node_equality" + tag, node_err, 1e-10);
      close_to(r, "c6.mean_l" + tag, l.mean(), mean_l, 1e-12);
      close_to(r, "c6.mean_m" + tag, m.mean(), mean_m, 1e-12);
      out.push_back({{"lambda", lambda}, {"N", N}, {"min_slack_l", min_of(lo)}, {"min_slack_m", min_of(hi)},
                     {"node_error", node_err}, {"mean_l", l.mean()}, {"mean_m", m.mean()}});
    }
  r.results["periodic"] = std::move(out);
}

// 7. u_N ≥ log|2 sin πx|, mean and coefficient bounds.
void log_sine_suite(std::uint64_t seed, RunReport& r) {
  auto rng = stream(seed, 7);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  json out = json::array();
  for (int N : {1, 4, 16, 64}) {
    const TrigPoly u = trig_log_majorant_u(N);
    std::vector<double> xs;
    for (int k = 1; k < 4096; ++k) xs.push_back(k / 4096.0);
    for (int i = 0; i < 64; ++i) xs.push_back(ux(rng));
    for (int n = 1; n <= N; ++n) xs.push_back(n / (N + 1.0));
    const auto s = map_parallel(xs, [&](double x) {
      const double q = std::log(std::abs(2.0 * std::sin(kPi * x)));
      return std::isfinite(q) ? u(x) - q : HUGE_VAL;
    });
    double coeff_violation = 0.0;
    for (int n = 1; n <= N; ++n) {
      const auto c = u.coeff(n);
      coeff_violation = std::max({coeff_violation, c.real(), -1.0 / (2.0 * n) - c.real(), std::abs(c.imag())});
    }
    const std::string tag = ".N=" + std::to_string(N);
    at_least(r, "c7.u_majorant" + tag, min_of(s), 1e-10);
    close_to(r, "c7.mean" + tag, u.mean(), std::numbers::ln2 / (N + 1.0), 1e-10);
    at_most(r, "c7.coefficient_bounds" + tag, coeff_violation, 1e-12, "-1/(2n) <= c(n) <= 0");
    out.push_back({{"N", N}, {"min_slack", min_of(s)}, {"mean", u.mean()}, {"max_coefficient_violation", coeff_violation}});
  }
  r.results["log_sine"] = std::move(out);
}

// 8. Hermitian form bounds and sharpness witnesses.
void hermitian_forms(std::uint64_t seed, RunReport& r) {
  auto rng = stream(seed, 8);
  std::uniform_int_distribution<int> size(2, 60);
  std::uniform_real_distribution<double> udelta(0.5, 2.0);
  json trials = json::array();
  for (const auto& fam : test_families()) {
    for (WitnessKind kind : {WitnessKind::Lower, WitnessKind::Upper}) {
      if (kind == WitnessKind::Upper && classify(fam.m) != Admissibility::Cond47) continue;
      double worst = HUGE_VAL;
      for (int i = 0; i < 100; ++i) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        const double delta = udelta(rng);
        const PointSet pts = random_point_set(rng, n, delta);
        const Coeffs a = random_coeffs(rng, n);
        const double form = evaluate_form(fam.m, pts, a);
        const double n2 = norm2(a);
        const double slack = kind == WitnessKind::Lower ? form + lower_constant_A(fam.m, delta) * n2
                                                        : upper_constant_B(fam.m, delta) * n2 - form;
        worst = std::min(worst, slack / n2);
      }
      const std::string k = kind == WitnessKind::Lower ? "lower" : "upper";
      at_least(r, "c8." + k + "." + fam.name + ".min_normalized_slack", worst, 1e-9, "100 random trials");
      trials.push_back({{"measure", fam.name}, {"bound", k}, {"min_normalized_slack", worst}});
    }
  }

  json table = json::array();
  for (const auto& fam : test_families()) {
    for (WitnessKind kind : {WitnessKind::Lower, WitnessKind::Upper}) {
      if (kind == WitnessKind::Upper && classify(fam.m) != Admissibility::Cond47) continue;
      const double c = kind == WitnessKind::Lower ? lower_constant_A(fam.m, 1.0) : upper_constant_B(fam.m, 1.0);
      json row = {{"measure", fam.name}, {"bound", kind == WitnessKind::Lower ? "lower" : "upper"}, {"constant", c}};
      json ratios = json::object();
      for (int N : {10, 100, 1000, 2000}) ratios[std::to_string(N)] = sharpness_witness(fam.m, 1.0, N, kind) / c;
      row["ratio"] = std::move(ratios);
      table.push_back(std::move(row));
    }
  }

  const MeasureSpec haar = MeasureSpec::haar();
  const double wl = sharpness_witness(haar, 1.0, 2000, WitnessKind::Lower);
  close_to(r, "c8.sharpness.haar.lower", wl / std::numbers::ln2, 1.0, 0.02, "ratio to log 2 at N = 2000, delta = 1");
  const MeasureSpec p15 = MeasureSpec::power(1.5);
  const double wu = sharpness_witness(p15, 1.0, 2000, WitnessKind::Upper);
  close_to(r, "c8.sharpness.power:1.5.upper", wu / upper_constant_B(p15, 1.0), 1.0, 0.02,
           "ratio to B at N = 2000, delta = 1");
  r.results["hermitian_forms"] = {{"trials", std::move(trials)}, {"sharpness_table", std::move(table)}};
}

// 9. HLS constants.
void hls_suite(std::uint64_t, RunReport& r) {
  json out = json::array();
  for (double delta : {1.0, 2.0}) {
    const HlsConstants c = hls_constants(1.0, delta);
    close_to(r, "c9.sigma=1.lower.delta=" + fmt(delta), c.lower, std::log(4.0) / delta, 1e-12);
    out.push_back({{"sigma", 1.0}, {"delta", delta}, {"lower", c.lower}});
  }
  for (double sigma : {0.5, 1.5}) {
    const HlsConstants z = hls_constants(sigma, 1.0);
    const HlsConstants g = hls_constants_via_measure(sigma, 1.0);
    close_to(r, "c9.sigma=" + fmt(sigma) + ".lower_routes", z.lower, g.lower, 1e-10);
    json row = {{"sigma", sigma}, {"delta", 1.0}, {"lower_zeta", z.lower}, {"lower_gamma_zeta", g.lower}};
    if (z.upper && g.upper) {
      close_to(r, "c9.sigma=" + fmt(sigma) + ".upper_routes", *z.upper, *g.upper, 1e-10);
      row["upper_zeta"] = *z.upper;
      row["upper_gamma_zeta"] = *g.upper;
    }
    out.push_back(std::move(row));
  }
  r.results["hls"] = std::move(out);
}

// 10. Erdős–Turán soundness, equality case, Jensen.
void erdos_turan_suite(std::uint64_t seed, RunReport& r) {
  auto rng = stream(seed, 10);
  std::uniform_int_distribution<int> msize(1, 32);
  double worst = HUGE_VAL;
  for (int i = 0; i < 200; ++i) {
    const RootSet alpha = random_roots(rng, static_cast<std::size_t>(msize(rng)), 2.0);
    const double sup = sup_log_oracle(alpha);
    for (int N : {0, 1, 4, 16, 64}) worst = std::min(worst, et_bound(alpha, N).bound - sup);
  }
  at_least(r, "c10.soundness.min_slack", worst, 1e-9, "200 random root sets, N in {0, 1, 4, 16, 64}");

  const RootSet one{{1.0, 0.0}};
  const double b = et_bound(one, 0).bound, s = sup_log_oracle(one);
  close_to(r, "c10.equality.bound", b, std::numbers::ln2, 1e-9);
  close_to(r, "c10.equality.sup", s, std::numbers::ln2, 1e-9);

  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), rad(0.0, 2.0);
  double jensen = 0.0;
  for (int i = 0; i < 20; ++i) {
    RootSet alpha(static_cast<std::size_t>(msize(rng)));
    for (auto& a : alpha) {
      double rr;
      do rr = rad(rng);
      while (std::abs(rr - 1.0) < 0.05);
      a = std::polar(rr, ang(rng));
    }
    jensen = std::max(jensen, jensen_check(alpha));
  }
  at_most(r, "c10.jensen.max_error", jensen, 1e-8, "20 random root sets, ||alpha| - 1| >= 0.05");
  r.results["erdos_turan"] = {
      {"min_slack", worst}, {"equality_bound", b}, {"equality_sup", s}, {"jensen_max_error", jensen}};
}

using Runner = void (*)(std::uint64_t, RunReport&);
constexpr Runner kRunners[] = {kernel_sandwich, kernel_integrals,   kernel_transforms, log_majorant,   superposed_routes,
                               periodic_suite,  log_sine_suite,     hermitian_forms,   hls_suite,      erdos_turan_suite};

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "kernels") return {1, 2, 3};
  if (suite == "superposed") return {4, 5};
  if (suite == "periodic") return {6, 7};
  if (suite == "forms") return {8, 9};
  if (suite == "et") return {10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernels", "superposed", "periodic", "forms", "et", "all"};
  return names;
}

void run_criterion(int criterion, std::uint64_t seed, RunReport& report) {
  if (criterion < 1 || criterion > 10) throw std::invalid_argument("criterion must be in 1..10");
  kRunners[criterion - 1](seed, report);
}

RunReport run_suite(const std::string& suite, std::uint64_t seed) {
  const auto criteria = suite_criteria(suite);
  RunReport r;
  r.command = "verify --suite " + suite + " --seed " + std::to_string(seed);
  r.seed = seed;
  for (int c : criteria) run_criterion(c, seed, r);
  return r;
}

}  // namespace extremal
