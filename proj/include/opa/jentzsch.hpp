#pragma once

#include <vector>

#include "opa/gram.hpp"
#include "opa/roots.hpp"

namespace opa {

// Per-degree zero distribution statistics.
struct ZeroStats {
  int degree = 0;
  double epsilon = 0.0;
  double cutoff_radius = 2.0;
  double tau_eps_fraction = 0.0;    // fraction of roots with |z| <= 1 + eps
  double geo_mean_modulus = 0.0;    // (prod over all roots |z_j|)^{1/n}
  double angular_discrepancy = 0.0; // star discrepancy of args, roots with |z| <= cutoff
  int count_in_unit_disk = 0;       // roots with |z| < 1
  double min_root_modulus = 0.0;
};

ZeroStats zero_stats(const RootSet& roots, int n, double eps, double cutoff_radius = 2.0);

struct SweepRow {
  int degree = 0;
  bool constant_approximant = false;  // stats undefined when true
  ZeroStats stats;
  double residual_norm = 0.0;
};

// Approximant + roots + stats per degree; degrees computed concurrently,
// rows emitted in input order.  A serial reference is kept for testing.
std::vector<SweepRow> jentzsch_sweep(const CoeffSeries& f, const WeightSequence& w,
                                     const std::vector<int>& degrees, double eps);
std::vector<SweepRow> jentzsch_sweep_serial(const CoeffSeries& f, const WeightSequence& w,
                                            const std::vector<int>& degrees, double eps);

// Multi-zero construction: g_r(z) = f_{k,n}(z^r) with f_{k,n} the shifted
// Cayley section; the degree-r optimal approximant has its r roots on one
// circle with equidistributed arguments when w decreases fast enough.
struct MultiZeroReport {
  Approximant approximant;
  std::vector<Complex> roots;
  bool weights_decreasing = false;   // w strictly decreasing on touched indices
  bool gap_condition = false;        // w_{kr+1} > 4 w_{nr+kr+1}
  double max_offgrid_coeff = 0.0;    // largest coefficient away from powers of z^r
  double modulus_formula = 0.0;      // (||z^r g||^2 / |<g, z^r g>|)^{1/r}
  double max_modulus_error = 0.0;    // worst | |z_0| - modulus_formula |
  double max_angle_gap_error = 0.0;  // worst deviation of angular gaps from 2 pi / r
};

MultiZeroReport multi_zero_example(const WeightSequence& w, int k, int n, int r);

}  // namespace opa
