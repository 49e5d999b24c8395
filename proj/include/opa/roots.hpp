#pragma once

#include <stdexcept>
#include <vector>

#include "opa/series.hpp"

namespace opa {

struct RootSet {
  std::vector<Complex> roots;
  double max_residual = 0.0;  // max |p(r)| / (sum |c_k| max(1,|r|)^k)
  int degree_deflated = 0;    // effective degree after stripping zero coefficients
};

struct RootsError : std::runtime_error {
  std::vector<Complex> best_iterate;
  std::vector<double> residuals;
  explicit RootsError(std::vector<Complex> it, std::vector<double> res)
      : std::runtime_error("poly_roots: Aberth iteration did not converge"),
        best_iterate(std::move(it)),
        residuals(std::move(res)) {}
};

// All complex roots by simultaneous Aberth-Ehrlich iteration from
// perturbed-circle initial guesses (Cauchy bound radius), with Newton
// polishing.  Exact zero leading/trailing coefficients are stripped; roots
// at the origin are re-appended with multiplicity.
RootSet poly_roots(const CoeffSeries& p, double tol = 1e-12);
RootSet poly_roots(const std::vector<Complex>& coeffs, double tol = 1e-12);

// Polynomial coefficient vectors (in x) of the monic orthogonal polynomials
// P_0..P_N; row j holds the coefficients of P_j.  Small-N helper for the
// zero/eigenvalue duality and interlacing checks.
std::vector<std::vector<double>> monic_polynomials(const WeightSequence& w, std::size_t N);

}  // namespace opa
