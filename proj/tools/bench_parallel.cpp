// Compares the OpenMP kernels against their serial reference
// implementations: Gram-matrix assembly and the degree sweep.

#include <chrono>
#include <cstdio>

#include "opa/gram.hpp"
#include "opa/jentzsch.hpp"
#include "opa/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel kernels fall back to serial\n");
#endif

  opa::WeightSequence w = opa::WeightSequence::bergman(0.0);
  opa::CoeffSeries f = opa::binomial_series(1.5, opa::BinomialSign::Plus, 20000);

  int n = 160;
  opa::HermitianMatrix gs, gp;
  double t_serial = time_of([&] { gs = opa::gram_matrix_serial(f, w, n); });
  double t_par = time_of([&] { gp = opa::gram_matrix(f, w, n); });
  bool identical = gs == gp;
  std::printf("gram %dx%d over %zu coefficients: serial %.3fs, parallel %.3fs (x%.2f)%s\n",
              n + 1, n + 1, f.coeffs.size(), t_serial, t_par, t_serial / t_par,
              identical ? "" : "  [MISMATCH]");

  opa::CoeffSeries g = opa::CoeffSeries::real({1.0, -1.0});
  std::vector<int> degrees;
  for (int d = 10; d <= 90; d += 5) degrees.push_back(d);
  std::vector<opa::SweepRow> rs, rp;
  double s_serial = time_of([&] { rs = opa::jentzsch_sweep_serial(g, w, degrees, 0.05); });
  double s_par = time_of([&] { rp = opa::jentzsch_sweep(g, w, degrees, 0.05); });
  std::printf("sweep over %zu degrees: serial %.3fs, parallel %.3fs (x%.2f)\n", degrees.size(),
              s_serial, s_par, s_serial / s_par);
  return identical ? 0 : 1;
}
