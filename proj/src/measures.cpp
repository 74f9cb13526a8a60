#include "extremal/measures.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <fstream>
#include <numbers>
#include <sstream>

#include "extremal/errors.hpp"
#include "extremal/numfmt.hpp"
#include "extremal/quad.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

namespace {

void check_scale(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("measure scale must be positive and finite");
}

}  // namespace

MeasureSpec MeasureSpec::haar(double scale) {
  check_scale(scale);
  return MeasureSpec(HaarLog{scale});
}

MeasureSpec MeasureSpec::power(double sigma, double scale) {
  check_scale(scale);
  if (!(sigma > 0.0 && sigma < 2.0)) throw DomainError("power measure: sigma must lie in (0, 2)");
  if (sigma == 1.0) return haar(scale);
  return MeasureSpec(PowerLaw{sigma, scale});
}

MeasureSpec MeasureSpec::atomic(std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty()) throw AdmissibilityError("atomic measure needs at least one atom");
  for (auto [lam, w] : atoms)
    if (!(lam > 0.0) || !(w > 0.0) || !std::isfinite(lam) || !std::isfinite(w))
      throw DomainError("atomic measure: atoms need lambda > 0 and weight > 0");
  return MeasureSpec(Atomic{std::move(atoms)});
}

MeasureSpec MeasureSpec::weight(std::function<double(double)> density, std::string name) {
  if (!density) throw DomainError("weight measure: empty density");
  return MeasureSpec(Weight{std::move(density), std::move(name)});
}

std::string MeasureSpec::describe() const {
  auto scaled = [](std::string s, double c) { return c == 1.0 ? s : s + "*" + format_double(c); };
  if (auto* h = std::get_if<HaarLog>(&family_)) return scaled("haar", h->scale);
  if (auto* p = std::get_if<PowerLaw>(&family_)) return scaled("power:" + format_double(p->sigma), p->scale);
  if (auto* a = std::get_if<Atomic>(&family_)) return "atomic[" + std::to_string(a->atoms.size()) + "]";
  return "weight:" + std::get<Weight>(family_).name;
}

const char* to_string(Admissibility a) { return a == Admissibility::Cond47 ? "Cond47" : "Cond31"; }

Admissibility classify(const MeasureSpec& measure) {
  const auto& fam = measure.family();
  if (std::holds_alternative<HaarLog>(fam)) return Admissibility::Cond31;
  if (auto* p = std::get_if<PowerLaw>(&fam)) return p->sigma > 1.0 ? Admissibility::Cond47 : Admissibility::Cond31;
  if (std::holds_alternative<Atomic>(fam)) return Admissibility::Cond47;
  auto moment = [&](const Integrand& g) -> double {
    try {
      return integrate_measure(g, measure, 1e-8).value;
    } catch (const DivergenceError&) {
      return HUGE_VAL;
    }
  };
  const double m47 = moment([](double l) { return l / (l + 1.0); });
  if (m47 > 0.0 && std::isfinite(m47)) return Admissibility::Cond47;
  const double m31 = moment([](double l) { return l / (l * l + 1.0); });
  if (m31 > 0.0 && std::isfinite(m31)) return Admissibility::Cond31;
  throw AdmissibilityError("measure " + measure.describe() + " satisfies neither moment condition");
}

Extended f_mu(const MeasureSpec& measure, double x) {
  if (!std::isfinite(x)) throw DomainError("f_mu: x must be finite");
  const double ax = std::abs(x);
  const auto& fam = measure.family();
  if (auto* h = std::get_if<HaarLog>(&fam)) {
    if (ax == 0.0) return Extended::infinity();
    return -h->scale * std::log(ax);
  }
  if (auto* p = std::get_if<PowerLaw>(&fam)) {
    const double g = p->scale * gamma(1.0 - p->sigma);
    if (ax == 0.0) return p->sigma > 1.0 ? Extended(-g) : Extended::infinity();
    return g * (std::pow(ax, p->sigma - 1.0) - 1.0);
  }
  if (auto* a = std::get_if<Atomic>(&fam)) {
    double s = 0.0;
    for (auto [lam, w] : a->atoms) s += w * (std::expm1(-lam * ax) - std::expm1(-lam));
    return s;
  }
  try {
    return integrate_measure([ax](double l) { return std::expm1(-l * ax) - std::expm1(-l); }, measure).value;
  } catch (const DivergenceError&) {
    if (ax == 0.0) return Extended::infinity();
    throw;
  }
}

double f_mu_prime(const MeasureSpec& measure, double x) {
  if (x == 0.0 || !std::isfinite(x)) throw DomainError("f_mu_prime: x must be finite and nonzero");
  const double ax = std::abs(x), sg = x > 0 ? 1.0 : -1.0;
  const auto& fam = measure.family();
  if (auto* h = std::get_if<HaarLog>(&fam)) return -sg * h->scale / ax;
  if (auto* p = std::get_if<PowerLaw>(&fam))
    return -sg * p->scale * (1.0 - p->sigma) * gamma(1.0 - p->sigma) * std::pow(ax, p->sigma - 2.0);
  if (auto* a = std::get_if<Atomic>(&fam)) {
    double s = 0.0;
    for (auto [lam, w] : a->atoms) s += w * lam * std::exp(-lam * ax);
    return -sg * s;
  }
  return -sg * integrate_measure([ax](double l) { return l * std::exp(-l * ax); }, measure).value;
}

void f_mu_derivatives(const MeasureSpec& measure, double b, std::span<double> out) {
  if (!(b > 0.0)) throw DomainError("f_mu_derivatives: b must be positive");
  if (out.empty()) return;
  const auto& fam = measure.family();
  const std::size_t n = out.size();
  if (auto* h = std::get_if<HaarLog>(&fam)) {
    out[0] = -h->scale * std::log(b);
    double fact = 1.0, pw = 1.0 / b;  // (j-1)!, b^{-j}
    for (std::size_t j = 1; j < n; ++j) {
      out[j] = h->scale * ((j % 2 == 0) ? 1.0 : -1.0) * fact * pw;
      fact *= static_cast<double>(j);
      pw /= b;
    }
    return;
  }
  if (auto* p = std::get_if<PowerLaw>(&fam)) {
    const double s = p->sigma, g = p->scale * gamma(1.0 - s);
    out[0] = g * (std::pow(b, s - 1.0) - 1.0);
    double coef = g, pw = std::pow(b, s - 1.0);
    for (std::size_t j = 1; j < n; ++j) {
      coef *= s - static_cast<double>(j);
      pw /= b;
      out[j] = coef * pw;
    }
    return;
  }
  if (auto* a = std::get_if<Atomic>(&fam)) {
    std::fill(out.begin(), out.end(), 0.0);
    for (auto [lam, w] : a->atoms) {
      out[0] += w * (std::expm1(-lam * b) - std::expm1(-lam));
      double t = w * std::exp(-lam * b);
      for (std::size_t j = 1; j < n; ++j) {
        t *= -lam;
        out[j] += t;
      }
    }
    return;
  }
  out[0] = f_mu(measure, b).value();
  for (std::size_t j = 1; j < n; ++j) {
    const int jj = static_cast<int>(j);
    out[j] = integrate_measure([b, jj](double l) { return std::pow(-l, jj) * std::exp(-l * b); }, measure).value;
  }
}

MeasureSpec dilate(const MeasureSpec& measure, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("dilate: delta must be positive");
  const auto& fam = measure.family();
  if (std::holds_alternative<HaarLog>(fam)) return measure;
  if (auto* p = std::get_if<PowerLaw>(&fam)) return MeasureSpec::power(p->sigma, p->scale * std::pow(delta, 1.0 - p->sigma));
  if (auto* a = std::get_if<Atomic>(&fam)) {
    auto atoms = a->atoms;
    for (auto& at : atoms) at.first /= delta;
    return MeasureSpec::atomic(std::move(atoms));
  }
  const auto& w = std::get<Weight>(fam);
  auto density = w.density;
  return MeasureSpec::weight([density, delta](double u) { return delta * density(delta * u); },
                             w.name + "/" + format_double(delta));
}

double lorentz_integral(const MeasureSpec& measure, double t) {
  if (t == 0.0 || !std::isfinite(t)) throw DomainError("lorentz_integral: t must be finite and nonzero");
  const double at = std::abs(t), w2 = 4.0 * std::numbers::pi * std::numbers::pi * t * t;
  const auto& fam = measure.family();
  if (auto* h = std::get_if<HaarLog>(&fam)) return h->scale / (2.0 * at);
  if (auto* p = std::get_if<PowerLaw>(&fam))
    return p->scale * std::numbers::pi /
           (std::pow(2.0 * std::numbers::pi * at, p->sigma) * std::sin(0.5 * std::numbers::pi * p->sigma));
  auto g = [w2](double l) { return 2.0 * l / (l * l + w2); };
  if (auto* a = std::get_if<Atomic>(&fam)) {
    double s = 0.0;
    for (auto [lam, w] : a->atoms) s += w * g(lam);
    return s;
  }
  return integrate_measure(g, measure).value;
}

double minorant_gap_integral(const MeasureSpec& measure, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be positive");
  const auto& fam = measure.family();
  if (auto* h = std::get_if<HaarLog>(&fam)) return h->scale * std::numbers::ln2 / delta;
  if (auto* p = std::get_if<PowerLaw>(&fam)) {
    const double s = p->sigma;
    return p->scale * (2.0 - std::pow(2.0, 2.0 - s)) * gamma(1.0 - s) * zeta(1.0 - s) / std::pow(delta, s);
  }
  auto g = [delta](double l) { return defect_minorant(l / delta) / delta; };
  if (auto* a = std::get_if<Atomic>(&fam)) {
    double s = 0.0;
    for (auto [lam, w] : a->atoms) s += w * g(lam);
    return s;
  }
  return integrate_measure(g, measure).value;
}

double majorant_gap_integral(const MeasureSpec& measure, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be positive");
  if (classify(measure) != Admissibility::Cond47)
    throw AdmissibilityError("majorant constant needs a Cond47 measure, got " + measure.describe());
  const auto& fam = measure.family();
  if (auto* p = std::get_if<PowerLaw>(&fam)) {
    const double s = p->sigma;
    return p->scale * 2.0 * gamma(1.0 - s) * zeta(1.0 - s) / std::pow(delta, s);
  }
  auto g = [delta](double l) { return defect_majorant(l / delta) / delta; };
  if (auto* a = std::get_if<Atomic>(&fam)) {
    double s = 0.0;
    for (auto [lam, w] : a->atoms) s += w * g(lam);
    return s;
  }
  return integrate_measure(g, measure).value;
}

std::vector<std::pair<double, double>> read_measure_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open measure file " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(path + ": empty file");
  if (line.rfind("lambda,weight", 0) != 0) throw std::invalid_argument(path + ": header must be lambda,weight");
  std::vector<std::pair<double, double>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected two columns");
    const double lam = parse_double(std::string_view(line).substr(0, comma));
    const double w = parse_double(std::string_view(line).substr(comma + 1));
    if (!rows.empty() && !(lam > rows.back().first))
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": lambda must be strictly increasing");
    rows.emplace_back(lam, w);
  }
  if (rows.empty()) throw std::invalid_argument(path + ": no rows");
  return rows;
}

MeasureSpec weight_from_table(std::vector<std::pair<double, double>> rows, std::string name) {
  if (rows.size() < 2) throw std::invalid_argument("weight table needs at least two rows");
  for (auto [lam, w] : rows)
    if (!(lam >= 0.0) || !(w >= 0.0)) throw DomainError("weight table: negative lambda or weight");
  auto table = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(rows));
  return MeasureSpec::weight(
      [table](double l) {
        const auto& t = *table;
        if (l < t.front().first || l >= t.back().first) return 0.0;
        auto it = std::upper_bound(t.begin(), t.end(), l, [](double v, const auto& r) { return v < r.first; });
        return std::prev(it)->second;
      },
      std::move(name));
}

}  // namespace extremal
