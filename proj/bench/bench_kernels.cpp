// Serial vs OpenMP timings for the parallel kernels.  Results are compared
// bit for bit; the parallel paths keep reductions in index order.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "extremal/erdos_turan.hpp"
#include "extremal/forms.hpp"
#include "extremal/grid.hpp"
#include "extremal/superposed.hpp"

using namespace extremal;

template <class F>
double seconds(F&& f, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double ts, double tp, bool same) {
  std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  identical %s\n", name, ts, tp, ts / tp,
              same ? "yes" : "NO");
}

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto xs = linspace(-50.0, 50.0, 20001);
  const MeasureSpec p05 = MeasureSpec::power(0.5);
  auto g = [&](double x) { return eval_G(p05, x); };
  std::vector<double> a, b;
  const double ts = seconds([&] { a = map_serial(xs, g); });
  const double tp = seconds([&] { b = map_parallel(xs, g); });
  row("G_mu grid (power:0.5)", ts, tp, a == b);

  std::mt19937_64 rng(42);
  const PointSet pts = random_point_set(rng, 3000, 1.0);
  const Coeffs c = random_coeffs(rng, 3000);
  const MeasureSpec haar = MeasureSpec::haar();
  double fs = 0, fp = 0;
  const double t1 = seconds([&] { fs = evaluate_form_serial(haar, pts, c); });
  const double t2 = seconds([&] { fp = evaluate_form(haar, pts, c); });
  row("Hermitian form (3000 pts)", t1, t2, fs == fp);

  const RootSet alpha = random_roots(rng, 64, 2.0);
  double ss = 0, sp = 0;
  const double t3 = seconds([&] { ss = sup_log_oracle_serial(alpha, 1 << 18); });
  const double t4 = seconds([&] { sp = sup_log_oracle(alpha, 1 << 18); });
  row("sup oracle (64 roots)", t3, t4, ss == sp);
  return 0;
}
