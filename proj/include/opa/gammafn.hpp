#pragma once

#include <complex>

namespace opa {

// Principal branch of log Gamma, Lanczos approximation (g = 7, 9 coefficients)
// with the reflection formula for Re z < 1/2.  Relative accuracy on the order
// of 1e-13 away from the poles at the nonpositive integers.
std::complex<double> log_gamma(std::complex<double> z);

double log_gamma(double x);

// log of the Euler beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
std::complex<double> log_beta(std::complex<double> x, std::complex<double> y);

}  // namespace opa
