// extremal: evaluation, coefficient dumps, bounds and verification suites.
// All output is assembled in memory and written only after the command
// succeeds, so a usage or numeric error never leaves a partial file behind.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "extremal/erdos_turan.hpp"
#include "extremal/errors.hpp"
#include "extremal/exp_kernel.hpp"
#include "extremal/forms.hpp"
#include "extremal/grid.hpp"
#include "extremal/measures.hpp"
#include "extremal/numfmt.hpp"
#include "extremal/periodic.hpp"
#include "extremal/report.hpp"
#include "extremal/superposed.hpp"
#include "extremal/trig_io.hpp"
#include "extremal/verification.hpp"
#include "json.hpp"

namespace {

using namespace extremal;
using json = nlohmann::ordered_json;

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kNoConvergence = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string out;
  std::string format = "csv";
  std::optional<double> tol;
  std::uint64_t seed = 1;

  std::string kind;
  std::optional<double> lambda;
  std::string measure = "haar";
  double delta = 1.0;
  std::string grid;
  bool with_target = false;
  std::optional<int> N;
  std::optional<double> sigma;
  std::string points, coeffs, roots;
  std::string suite = "all";
};

MeasureSpec parse_measure(const std::string& s) {
  if (s == "haar") return MeasureSpec::haar();
  const auto c = s.find(':');
  if (c == std::string::npos) throw UsageError("unknown measure '" + s + "'");
  const std::string fam = s.substr(0, c), arg = s.substr(c + 1);
  if (fam == "power") {
    double sigma;
    try {
      sigma = parse_double(arg);
    } catch (const std::invalid_argument&) {
      throw UsageError("power measure needs a number, got '" + arg + "'");
    }
    return MeasureSpec::power(sigma);
  }
  if (fam == "atomic") return MeasureSpec::atomic(read_measure_csv(arg));
  if (fam == "weight") return weight_from_table(read_measure_csv(arg), "weight:" + arg);
  throw UsageError("unknown measure family '" + fam + "'");
}

double need_lambda(const Options& o) {
  if (!o.lambda) throw UsageError("--lambda is required for kind " + o.kind);
  if (!(*o.lambda > 0.0) || !std::isfinite(*o.lambda)) throw UsageError("--lambda must be positive");
  return *o.lambda;
}

int need_N(const Options& o) {
  if (!o.N) throw UsageError("--N is required for kind " + o.kind);
  if (*o.N < 0) throw UsageError("--N must be nonnegative");
  return *o.N;
}

// Rows of doubles from a CSV with a fixed header; errors carry line numbers.
std::vector<std::vector<double>> read_table(const std::string& path, const std::string& header, std::size_t cols) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind(header, 0) != 0)
    throw std::invalid_argument(path + ":1: header must be " + header);
  std::vector<std::vector<double>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::string_view v(line);
    try {
      while (true) {
        const auto c = v.find(',');
        row.push_back(parse_double(v.substr(0, c)));
        if (c == std::string_view::npos) break;
        v.remove_prefix(c + 1);
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (row.size() != cols)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(cols) +
                                  " columns");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument(path + ": no rows");
  return rows;
}

struct Row {
  double x;
  double value;
  std::optional<double> target;
  std::optional<double> defect;
};

std::string render_rows(const std::vector<Row>& rows, const std::string& format, const std::string& command,
                        bool with_target) {
  if (format == "json") {
    json j;
    j["command"] = command;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json e;
      e["x"] = json_number(r.x);
      e["value"] = json_number(r.value);
      if (with_target) {
        e["target"] = json_number(*r.target);
        e["defect"] = json_number(*r.defect);
      }
      j["rows"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  std::string out = with_target ? "x,value,target,defect\n" : "x,value\n";
  for (const auto& r : rows) {
    out += format_double(r.x) + "," + format_double(r.value);
    if (with_target) out += "," + format_double(*r.target) + "," + format_double(*r.defect);
    out += "\n";
  }
  return out;
}

std::string cmd_eval(const Options& o, const std::string& command) {
  std::vector<double> xs;
  try {
    xs = parse_grid(o.grid);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(o.delta > 0.0)) throw UsageError("--delta must be positive");
  const std::string& k = o.kind;
  // U always reports log|x| and the defect; it has no parameters to confuse.
  const bool with_target = o.with_target || k == "U";
  if (with_target && (k == "Lhat" || k == "Mhat" || k == "p" || k == "q"))
    throw UsageError("--with-target is not available for kind " + k);

  std::function<Row(double)> f;
  if (k == "L" || k == "M") {
    const double lambda = need_lambda(o);
    const bool lower = k == "L";
    f = [=](double x) {
      const double v = lower ? eval_L(lambda, x).value : eval_M(lambda, x).value;
      const double t = std::exp(-lambda * std::abs(x));
      return Row{x, v, t, lower ? minorant_gap(lambda, x) : majorant_gap(lambda, x)};
    };
  } else if (k == "Lhat" || k == "Mhat") {
    const double lambda = need_lambda(o);
    const bool lower = k == "Lhat";
    f = [=](double t) { return Row{t, lower ? eval_Lhat(lambda, t).value : eval_Mhat(lambda, t).value, {}, {}}; };
  } else if (k == "p") {
    const double lambda = need_lambda(o);
    f = [=](double x) { return Row{x, eval_p(lambda, x), {}, {}}; };
  } else if (k == "q") {
    const MeasureSpec m = parse_measure(o.measure);
    f = [=](double x) { return Row{x, q_mu(m, x).as_double(), {}, {}}; };
  } else if (k == "G" || k == "H") {
    const MeasureSpec m = parse_measure(o.measure);
    const ApproxKind kind = k == "G" ? ApproxKind::Minorant : ApproxKind::Majorant;
    const EntireApprox approx(m, kind, o.delta);
    f = [=](double x) {
      const double v = approx(x);
      const double t = approx.target(x).as_double();
      return Row{x, v, t, kind == ApproxKind::Minorant ? t - v : v - t};
    };
  } else if (k == "U") {
    f = [](double x) {
      const double v = eval_U(x), t = std::log(std::abs(x));
      return Row{x, v, t, v - t};
    };
  } else {
    throw UsageError("unknown eval kind '" + k + "'");
  }
  std::vector<Row> rows(xs.size());
  // Each row is independent; the first exception wins deterministically by index.
  std::vector<std::exception_ptr> errs(xs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(xs.size()); ++i) {
    try {
      rows[i] = f(xs[i]);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return render_rows(rows, o.format, command, with_target);
}

std::string cmd_coeffs(const Options& o) {
  const int N = need_N(o);
  const double tol = o.tol.value_or(1e-12);
  const std::string& k = o.kind;
  TrigPoly p;
  if (k == "l")
    p = trig_minorant_l(need_lambda(o), N);
  else if (k == "m")
    p = trig_majorant_m(need_lambda(o), N);
  else if (k == "g")
    p = trig_minorant_g(parse_measure(o.measure), N, tol);
  else if (k == "h")
    p = trig_majorant_h(parse_measure(o.measure), N, tol);
  else if (k == "uN")
    p = trig_log_majorant_u(N, tol);
  else
    throw UsageError("unknown coeffs kind '" + k + "'");
  return o.format == "json" ? to_json(p) : to_csv(p);
}

RunReport cmd_bounds(const Options& o, const std::string& command) {
  RunReport r;
  r.command = command;
  r.seed = o.seed;
  const double tol = o.tol.value_or(1e-9);
  if (o.kind == "hls") {
    if (!o.sigma) throw UsageError("--sigma is required for kind hls");
    const HlsConstants c = hls_constants(*o.sigma, o.delta);
    r.results["sigma"] = c.sigma;
    r.results["delta"] = c.delta;
    r.results["lower"] = c.lower;
    if (c.upper) r.results["upper"] = *c.upper;
    r.results["continuity_extension"] = c.continuity_extension;
  } else if (o.kind == "form") {
    if (o.points.empty()) throw UsageError("--points is required for kind form");
    const MeasureSpec m = parse_measure(o.measure);
    std::vector<double> xi;
    Coeffs a;
    if (o.coeffs.empty()) {
      auto pc = read_points_csv(o.points);
      xi = std::move(pc.xi);
      a = std::move(pc.a);
    } else {
      for (const auto& row : read_table(o.points, "xi", 1)) xi.push_back(row[0]);
      for (const auto& row : read_table(o.coeffs, "re,im", 2)) a.emplace_back(row[0], row[1]);
      if (a.size() != xi.size()) throw std::invalid_argument("points and coeffs have different lengths");
    }
    const PointSet pts(std::move(xi), o.delta);
    const double form = evaluate_form(m, pts, a);
    const double n2 = norm2(a);
    const double A = lower_constant_A(m, o.delta);
    r.results["measure"] = m.describe();
    r.results["delta"] = o.delta;
    r.results["points"] = pts.size();
    r.results["form"] = form;
    r.results["norm2"] = n2;
    r.results["lower_constant"] = A;
    r.checks.push_back({"lower_bound", form + A * n2 >= -tol * n2, form + A * n2, 0.0, tol * n2, "form + A·Σ|a|²"});
    if (classify(m) == Admissibility::Cond47) {
      const double B = upper_constant_B(m, o.delta);
      r.results["upper_constant"] = B;
      r.checks.push_back({"upper_bound", B * n2 - form >= -tol * n2, B * n2 - form, 0.0, tol * n2, "B·Σ|a|² − form"});
    }
  } else if (o.kind == "et") {
    if (o.roots.empty()) throw UsageError("--roots is required for kind et");
    const RootSet alpha = read_roots_csv(o.roots);
    const EtBound b = et_bound(alpha, need_N(o));
    const double sup = sup_log_oracle(alpha);
    r.results["N"] = b.N;
    r.results["M"] = b.M;
    r.results["bound"] = b.bound;
    r.results["sup_estimate"] = sup;
    r.results["logplus_sum"] = b.logplus_sum;
    json ps = json::array();
    for (double v : b.power_sums) ps.push_back(v);
    r.results["power_sums"] = std::move(ps);
    r.checks.push_back({"soundness", b.bound - sup >= -tol, b.bound - sup, 0.0, tol, "bound − sup"});
  } else {
    throw UsageError("unknown bounds kind '" + o.kind + "'");
  }
  return r;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// argv without --out and its value, so reports do not depend on where they are written.
std::string echo_command(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0) continue;
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal majorants and minorants: evaluation, coefficients, bounds, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", o.tol, "Tolerance: quadrature for coeffs g/h/uN, check tolerance for bounds");
  app.add_option("--seed", o.seed, "RNG seed for verify");

  auto* eval = app.add_subcommand("eval", "Evaluate a function on a grid");
  eval->add_option("--kind", o.kind, "L, M, Lhat, Mhat, p, q, G, H or U")
      ->required()
      ->check(CLI::IsMember({"L", "M", "Lhat", "Mhat", "p", "q", "G", "H", "U"}));
  eval->add_option("--lambda", o.lambda, "Kernel parameter λ > 0");
  eval->add_option("--measure", o.measure, "haar, power:σ, atomic:file.csv or weight:file.csv");
  eval->add_option("--delta", o.delta, "Exponential type scale δ for G and H");
  eval->add_option("--grid", o.grid, "Grid a:b:n (n points, endpoints inclusive)")->required();
  eval->add_flag("--with-target", o.with_target, "Add target and defect columns");

  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients of a trigonometric polynomial");
  coeffs->add_option("--kind", o.kind, "l, m, g, h or uN")->required()->check(CLI::IsMember({"l", "m", "g", "h", "uN"}));
  coeffs->add_option("--lambda", o.lambda, "Kernel parameter λ > 0 (l, m)");
  coeffs->add_option("--measure", o.measure, "Measure (g, h)");
  coeffs->add_option("--N", o.N, "Degree")->required();

  auto* bounds = app.add_subcommand("bounds", "Form constants, form verdicts and Erdős–Turán bounds");
  bounds->add_option("--kind", o.kind, "hls, form or et")->required()->check(CLI::IsMember({"hls", "form", "et"}));
  bounds->add_option("--sigma", o.sigma, "HLS exponent σ");
  bounds->add_option("--delta", o.delta, "Separation δ");
  bounds->add_option("--measure", o.measure, "Measure for kind form");
  bounds->add_option("--points", o.points, "CSV with header xi (or xi,re,im)");
  bounds->add_option("--coeffs", o.coeffs, "CSV with header re,im");
  bounds->add_option("--roots", o.roots, "CSV with header re,im");
  bounds->add_option("--N", o.N, "Degree for kind et");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "kernels, superposed, periodic, forms, et or all")
      ->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const std::string command = echo_command(argc, argv);
  try {
    if (eval->parsed()) {
      emit(cmd_eval(o, command), o.out);
      return kPass;
    }
    if (coeffs->parsed()) {
      emit(cmd_coeffs(o), o.out);
      return kPass;
    }
    if (o.format == "csv" && app.get_option("--format")->count() > 0)
      throw UsageError("bounds and verify emit JSON only");
    RunReport r;
    if (bounds->parsed()) {
      r = cmd_bounds(o, command);
    } else {
      r = run_suite(o.suite, o.seed);
    }
    emit(r.to_json(), o.out);
    if (!r.all_pass()) {
      for (const auto& c : r.checks)
        if (!c.pass) std::cerr << "check failed: " << c.name << " observed " << format_double(c.observed) << "\n";
      return kCheckFailed;
    }
    return kPass;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best estimate " << format_double(e.best_estimate) << ", error "
              << format_double(e.abs_err) << ")\n";
    return kNoConvergence;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
