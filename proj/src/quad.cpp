#include "extremal/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * kWg[3], resk = fc * kWgk[7], resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    f1[j] = f(c - dx);
    f2[j] = f(c + dx);
    const double s = f1[j] + f2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  const double value = resk * h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  if (!std::isfinite(value) || !std::isfinite(err))
    throw DomainError("integrate_finite: integrand not finite on the interval");
  return {a, b, value, err};
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double tol) {
  QuadOptions opt;
  opt.tol = tol;
  return integrate_finite(f, a, b, opt);
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadOptions& opt) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("integrate_finite: need finite a < b");
  std::priority_queue<Segment> active;
  std::vector<Segment> frozen;
  Segment first = gk15(f, a, b);
  std::size_t evals = 15;
  double value = first.value, err = first.err;
  active.push(first);
  auto goal = [&] { return std::max(opt.tol, opt.rel_tol * std::abs(value)); };
  while (err > goal() && !active.empty()) {
    if (evals + 30 > opt.max_evals)
      throw ConvergenceError("integrate_finite: evaluation budget exhausted", value, err);
    Segment s = active.top();
    active.pop();
    const double m = 0.5 * (s.a + s.b);
    if (!(m > s.a && m < s.b) || (s.b - s.a) < 1e3 * std::numeric_limits<double>::min()) {
      frozen.push_back(s);
      continue;
    }
    Segment l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    evals += 30;
    value += l.value + r.value - s.value;
    err += l.err + r.err - s.err;
    active.push(l);
    active.push(r);
  }
  // Re-add from scratch to shed the drift of the running sums.
  double v = 0.0, e = 0.0;
  for (const auto& s : frozen) v += s.value, e += s.err;
  while (!active.empty()) {
    v += active.top().value;
    e += active.top().err;
    active.pop();
  }
  if (e > std::max(opt.tol, opt.rel_tol * std::abs(v)))
    throw ConvergenceError("integrate_finite: tolerance not reachable", v, e);
  return {v, e, evals};
}

namespace {

// Integrand pieces on (0,1) in the warped variable v.
struct Piece {
  Integrand h;
};

void check_shells(const Integrand& h, const char* where, double tol) {
  // Dyadic shells towards v = 0.  A convergent warped integrand is bounded
  // there, so shell contributions shrink geometrically.
  auto shell = [&](int j) { return gk15(h, std::ldexp(1.0, -j - 1), std::ldexp(1.0, -j)).value; };
  const double near = std::abs(shell(24)), far = std::abs(shell(44));
  // Shells below the tolerance are rounding noise, not a divergence.
  if (far > 0.75 * near && far > 0.1 * tol)
    throw DivergenceError(std::string("integrate_measure: integral diverges at ") + where);
}

QuadResult integrate_pieces(const Piece& lo, const Piece& hi, const QuadOptions& opt) {
  check_shells(lo.h, "lambda -> 0", opt.tol);
  check_shells(hi.h, "lambda -> infinity", opt.tol);
  QuadOptions half = opt;
  half.tol = 0.5 * opt.tol;
  QuadResult a = integrate_finite(lo.h, 0.0, 1.0, half);
  QuadResult b = integrate_finite(hi.h, 0.0, 1.0, half);
  return {a.value + b.value, a.abs_err_est + b.abs_err_est, a.evaluations + b.evaluations + 4 * 15};
}

// λ = v^k on (0,1) and λ = v^{-k'} on (1,∞), weight scale·λ^{-σ}.
QuadResult integrate_power_weight(const Integrand& g, double sigma, double scale, const QuadOptions& opt) {
  const double k0 = 1.0 / (2.0 - sigma), k1 = 1.0 / sigma;
  Piece lo{[&, k0, sigma, scale](double v) {
    const double lam = std::pow(v, k0);
    if (!(lam > 0.0)) return 0.0;
    return g(lam) * scale * std::pow(lam, -sigma) * k0 * lam / v;
  }};
  Piece hi{[&, k1, sigma, scale](double v) {
    const double lam = std::pow(v, -k1);
    if (!std::isfinite(lam)) return 0.0;
    return g(lam) * scale * std::pow(lam, -sigma) * k1 * lam / v;
  }};
  return integrate_pieces(lo, hi, opt);
}

QuadResult integrate_weight(const Integrand& g, const Weight& w, const QuadOptions& opt) {
  Piece lo{[&](double v) { return g(v) * w.density(v); }};
  Piece hi{[&](double v) {
    const double lam = 1.0 / v;
    if (!std::isfinite(lam)) return 0.0;
    return g(lam) * w.density(lam) * lam * lam;
  }};
  return integrate_pieces(lo, hi, opt);
}

}  // namespace

QuadResult integrate_measure(const Integrand& g, const MeasureSpec& measure, double tol) {
  QuadOptions opt;
  opt.tol = tol;
  return integrate_measure(g, measure, opt);
}

QuadResult integrate_measure(const Integrand& g, const MeasureSpec& measure, const QuadOptions& opt) {
  const auto& fam = measure.family();
  if (auto* h = std::get_if<HaarLog>(&fam)) return integrate_power_weight(g, 1.0, h->scale, opt);
  if (auto* p = std::get_if<PowerLaw>(&fam)) return integrate_power_weight(g, p->sigma, p->scale, opt);
  if (auto* at = std::get_if<Atomic>(&fam)) {
    QuadResult r;
    for (auto [lam, w] : at->atoms) r.value += w * g(lam);
    r.evaluations = at->atoms.size();
    r.abs_err_est = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
    if (!std::isfinite(r.value)) throw DivergenceError("integrate_measure: non-finite atomic sum");
    return r;
  }
  return integrate_weight(g, std::get<Weight>(fam), opt);
}

}  // namespace extremal
