#pragma once

#include <vector>

#include "opa/series.hpp"

namespace opa {

// Isolated eigenvalue data for the Bergman-type Jacobi matrix.
struct BergmanSpectrumEntry {
  int m;
  double t_m;           // (2m + beta + 3) / sqrt((m+1)(m+beta+2))
  double lambda_minus;  // (t_m - sqrt(t_m^2 - 4)) / 2
  double lambda_plus;   // 1 / lambda_minus
};

BergmanSpectrumEntry bergman_tm(double beta, int m);  // beta > -1, m >= 0

// Maclaurin coefficients of (1 - z / sqrt(beta+2))^{-(beta+3)}, the extremal
// function normalized to 1 at the origin.
CoeffSeries bergman_extremal(double beta, int N);

// lambda_0 d/dz k(z, lambda_0) with k(z, w) = (1 - z conj(w))^{-(2+beta)} and
// lambda_0 = 1 / sqrt(2+beta); computed from the kernel coefficients, an
// independent route to the same series as bergman_extremal.
CoeffSeries kernel_derivative_coeffs(int beta, int N);  // integer beta >= 0

// Eigenfunction for t_m: convolution of the finite binomial factor
// (1 - z sqrt((m+beta+2)/(m+1)))^m with the negative-binomial series
// (1 - z sqrt((m+1)/(m+beta+2)))^{-(m+3+beta)}.
CoeffSeries bergman_eigenfunction(double beta, int m, int N);

struct DirichletBounds {
  double zero_free_radius;  // (3/2)^{alpha/2}
  double norm_upper;        // 2 (2/3)^{alpha/2}
};

DirichletBounds dirichlet_bounds(double alpha);  // alpha < 0

// Frobenius indicial exponent n/2 - 3 - n ||J|| / (2 sqrt(||J||^2 - 4)).
double dirichlet_indicial_exponent(int n, double normJ);  // normJ > 2

// Coefficients of the optimal degree-n approximant to 1/(1-z)^a in the Hardy
// space: coeff_k = C(a+k-1, k) B(n+a+1, conj a) / B(n-k+1, conj a), evaluated
// entirely in log-Gamma space.
std::vector<Complex> hardy_beta_approximant(Complex a, int n);  // Re a > 0

}  // namespace opa
