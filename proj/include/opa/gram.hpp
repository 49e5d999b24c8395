#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "opa/series.hpp"

namespace opa {

// Degree-n optimal approximant to 1/f: minimizer of ||p f - 1||_w over
// polynomials of degree at most n.
struct Approximant {
  int degree = 0;
  std::vector<Complex> coeffs;
  double residual_norm = 1.0;
  std::vector<Complex> roots;  // filled by the roots module when requested
};

struct ConditioningError : std::runtime_error {
  double smallest_pivot;
  explicit ConditioningError(double pivot)
      : std::runtime_error("gram: matrix numerically not positive definite"),
        smallest_pivot(pivot) {}
};

using HermitianMatrix = std::vector<std::vector<Complex>>;

// Entry (j, k) = <z^j f, z^k f>_w.  The OpenMP kernel and the serial
// reference compute entries independently and agree bit for bit.
HermitianMatrix gram_matrix(const CoeffSeries& f, const WeightSequence& w, int n);
HermitianMatrix gram_matrix_serial(const CoeffSeries& f, const WeightSequence& w, int n);

// Solves the normal equations G c = (conj(f(0)), 0, ..., 0) by Cholesky
// factorization with a pivot floor of 1e-14; conditioning failures surface
// as ConditioningError.  When the truncation tail of f is too large relative
// to the smallest Gram diagonal the solve is refused (std::runtime_error).
// f(0) == 0 yields the zero polynomial with residual 1.
Approximant optimal_approximant(const CoeffSeries& f, const WeightSequence& w, int n);

// ||p f - 1||_w by direct expansion; test-side cross-check for the residual
// returned by optimal_approximant.
double residual_direct(const std::vector<Complex>& p, const CoeffSeries& f,
                       const WeightSequence& w);

// Zero of the first order approximant, ||zf||^2_w / <f, zf>_w.  Empty when
// the denominator vanishes: the degree-1 approximant is constant, which is a
// distinguished outcome rather than an error.
std::optional<Complex> first_order_zero(const CoeffSeries& f, const WeightSequence& w);

// Solve G c = b for Hermitian positive definite G (in-place Cholesky).
std::vector<Complex> solve_hermitian(HermitianMatrix G, std::vector<Complex> b);

}  // namespace opa
