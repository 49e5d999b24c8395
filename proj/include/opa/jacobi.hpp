#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "opa/series.hpp"

namespace opa {

// N x N truncation of the one-sided Jacobi matrix with zero diagonal and
// off-diagonal entries c_k = sqrt(w_k / w_{k+1}), k = 1..N-1.
struct JacobiTruncation {
  std::vector<double> offdiag;  // c_1..c_{N-1}
  std::size_t size() const { return offdiag.size() + 1; }
};

JacobiTruncation jacobi_truncation(const WeightSequence& w, std::size_t N);

struct NonConvergenceError : std::runtime_error {
  double last_value;
  std::size_t last_n;
  NonConvergenceError(double v, std::size_t n)
      : std::runtime_error("jacobi: truncation size cap reached before convergence"),
        last_value(v),
        last_n(n) {}
};

struct NoExtremalFunction : std::runtime_error {
  NoExtremalFunction() : std::runtime_error("no extremal function detected") {}
};

// Largest eigenvalue of the N x N truncation by Sturm-sequence bisection,
// absolute tolerance 1e-12.  Equals the spectral radius of the block.
double truncated_norm(const WeightSequence& w, std::size_t N);

// Eigenvalue of descending index (0 = largest) of the tridiagonal truncation.
double truncated_eigenvalue(const JacobiTruncation& J, std::size_t index);

// Number of eigenvalues of J strictly below x.
std::size_t sturm_count_below(const JacobiTruncation& J, double x);

struct NormEstimate {
  double value;
  std::size_t truncation_size;
};

// Doubles N from 64 until successive truncated norms differ by less than
// tol (Cauchy-type test).  Throws NonConvergenceError past the cap.
NormEstimate norm_estimate(const WeightSequence& w, double tol,
                           std::size_t cap = std::size_t(1) << 20);

// Monic orthogonal polynomial values [P_0(t), ..., P_N(t)]:
//   P_0 = 1, P_1 = t, P_j = t P_{j-1} - (w_{j-1}/w_j) P_{j-2}.
std::vector<double> monic_recurrence(const WeightSequence& w, double t, std::size_t N);

// Maclaurin coefficients [P_0(t*)..P_N(t*)] of the extremal function, with
// t* the estimated norm.  Throws NoExtremalFunction when the estimate does
// not exceed 2 + margin.
CoeffSeries extremal_coeffs(const WeightSequence& w, std::size_t N, double tol,
                            double margin = 1e-6);

// Eigenvalues above 2 + 10 tol that are stable to within tol under doubling
// of the truncation size; at most max_count values, sorted descending.
std::vector<double> point_spectrum_above_2(const WeightSequence& w, double tol,
                                           std::size_t max_count,
                                           std::size_t cap = std::size_t(1) << 20);

// Largest eigenvalue of the (N+1) x (N+1) truncation by shifted power
// iteration; max Theta over degree-N polynomials equals this over 2.
double power_iteration_top(const WeightSequence& w, std::size_t N1, double tol = 1e-13,
                           std::size_t max_iters = 200000);

// Partial sums of sum w_n P_n(2)^2, the attainment diagnostic for the
// ||J|| = 2 regime.  No attainment claim is made.
std::vector<double> attainment_partial_sums(const WeightSequence& w, std::size_t N);

}  // namespace opa
