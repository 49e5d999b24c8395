#include "opa/jentzsch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace opa {

namespace {

using std::numbers::pi;

SweepRow sweep_one(const CoeffSeries& f, const WeightSequence& w, int degree, double eps) {
  SweepRow row;
  row.degree = degree;
  Approximant p = optimal_approximant(f, w, degree);
  row.residual_norm = p.residual_norm;
  RootSet rs = poly_roots(CoeffSeries(p.coeffs));
  if (rs.degree_deflated == 0) {
    row.constant_approximant = true;
    return row;
  }
  row.stats = zero_stats(rs, rs.degree_deflated, eps);
  return row;
}

}  // namespace

ZeroStats zero_stats(const RootSet& roots, int n, double eps, double cutoff_radius) {
  if (n == 0) throw std::domain_error("zero_stats: degree must be positive");
  ZeroStats st;
  st.degree = n;
  st.epsilon = eps;
  st.cutoff_radius = cutoff_radius;
  double log_sum = 0.0;
  double min_mod = std::numeric_limits<double>::infinity();
  int tau = 0;
  std::vector<double> args;
  for (const Complex& z : roots.roots) {
    double m = std::abs(z);
    min_mod = std::min(min_mod, m);
    log_sum += std::log(m);
    if (m <= 1.0 + eps) ++tau;
    if (m < 1.0) ++st.count_in_unit_disk;
    if (m <= cutoff_radius) {
      double a = std::arg(z);
      if (a < 0.0) a += 2.0 * pi;
      args.push_back(a);
    }
  }
  st.tau_eps_fraction = static_cast<double>(tau) / n;
  st.geo_mean_modulus = std::exp(log_sum / n);
  st.min_root_modulus = min_mod;
  // Star discrepancy of the sorted arguments against uniform on [0, 2 pi).
  std::sort(args.begin(), args.end());
  double disc = 0.0;
  std::size_t m = args.size();
  for (std::size_t k = 0; k < m; ++k) {
    double u = args[k] / (2.0 * pi);
    disc = std::max(disc, std::max(static_cast<double>(k + 1) / m - u,
                                   u - static_cast<double>(k) / m));
  }
  st.angular_discrepancy = disc;
  return st;
}

std::vector<SweepRow> jentzsch_sweep(const CoeffSeries& f, const WeightSequence& w,
                                     const std::vector<int>& degrees, double eps) {
  if (f.is_zero()) throw std::domain_error("jentzsch_sweep: f must not be zero");
  std::vector<SweepRow> rows(degrees.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(degrees.size()); ++i)
    rows[static_cast<std::size_t>(i)] = sweep_one(f, w, degrees[static_cast<std::size_t>(i)], eps);
  return rows;
}

std::vector<SweepRow> jentzsch_sweep_serial(const CoeffSeries& f, const WeightSequence& w,
                                            const std::vector<int>& degrees, double eps) {
  if (f.is_zero()) throw std::domain_error("jentzsch_sweep: f must not be zero");
  std::vector<SweepRow> rows(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) rows[i] = sweep_one(f, w, degrees[i], eps);
  return rows;
}

MultiZeroReport multi_zero_example(const WeightSequence& w, int k, int n, int r) {
  if (k < 0 || n < 1 || r < 1) throw std::domain_error("multi_zero_example: bad parameters");
  MultiZeroReport rep;
  std::size_t top = static_cast<std::size_t>(n) * r + static_cast<std::size_t>(k) * r + 2;
  rep.weights_decreasing = w.strictly_decreasing(top);
  rep.gap_condition =
      w(static_cast<std::size_t>(k) * r + 1) > 4.0 * w(static_cast<std::size_t>(n + k) * r + 1);

  // g_r(z) = f_{k,n}(z^r): spread the shifted Cayley section over powers of z^r.
  CoeffSeries fkn = shift(cayley_section(n), static_cast<std::size_t>(k));
  std::vector<Complex> g(static_cast<std::size_t>(fkn.degree()) * r + 1, Complex(0.0));
  for (std::size_t j = 0; j < fkn.coeffs.size(); ++j) g[j * r] = fkn.coeffs[j];
  CoeffSeries gr(std::move(g));

  rep.approximant = optimal_approximant(gr, w, r);
  for (std::size_t j = 0; j < rep.approximant.coeffs.size(); ++j)
    if (j != 0 && j != static_cast<std::size_t>(r))
      rep.max_offgrid_coeff = std::max(rep.max_offgrid_coeff, std::abs(rep.approximant.coeffs[j]));

  CoeffSeries zrg = shift(gr, static_cast<std::size_t>(r));
  double num = weighted_inner(zrg, zrg, w).real();
  double den = std::abs(weighted_inner(gr, zrg, w));
  rep.modulus_formula = std::pow(num / den, 1.0 / r);

  RootSet rs = poly_roots(CoeffSeries(rep.approximant.coeffs));
  rep.roots = rs.roots;
  std::vector<double> angles;
  for (const Complex& z : rep.roots) {
    rep.max_modulus_error =
        std::max(rep.max_modulus_error, std::abs(std::abs(z) - rep.modulus_formula));
    angles.push_back(std::arg(z));
  }
  std::sort(angles.begin(), angles.end());
  if (angles.size() > 1) {
    for (std::size_t i = 0; i < angles.size(); ++i) {
      double gap = (i + 1 < angles.size()) ? angles[i + 1] - angles[i]
                                           : angles[0] + 2.0 * std::numbers::pi - angles[i];
      rep.max_angle_gap_error =
          std::max(rep.max_angle_gap_error, std::abs(gap - 2.0 * std::numbers::pi / r));
    }
  }
  return rep;
}

}  // namespace opa
