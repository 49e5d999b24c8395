#include "opa/gammafn.hpp"

#include <cmath>
#include <numbers>

namespace opa {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double log_gamma(double x) { return log_gamma(std::complex<double>(x, 0.0)).real(); }

std::complex<double> log_beta(std::complex<double> x, std::complex<double> y) {
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

}  // namespace opa
