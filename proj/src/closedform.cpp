#include "opa/closedform.hpp"

#include <cmath>
#include <stdexcept>

#include "opa/gammafn.hpp"

namespace opa {

BergmanSpectrumEntry bergman_tm(double beta, int m) {
  if (beta <= -1.0) throw std::domain_error("bergman_tm: beta must exceed -1");
  if (m < 0) throw std::domain_error("bergman_tm: m must be nonnegative");
  double md = m;
  double t = (2.0 * md + beta + 3.0) / std::sqrt((md + 1.0) * (md + beta + 2.0));
  double lm = 0.5 * (t - std::sqrt(t * t - 4.0));
  return {m, t, lm, 1.0 / lm};
}

CoeffSeries bergman_extremal(double beta, int N) {
  if (beta <= -1.0) throw std::domain_error("bergman_extremal: beta must exceed -1");
  return negative_binomial_series(1.0 / std::sqrt(beta + 2.0), beta + 3.0, N);
}

CoeffSeries kernel_derivative_coeffs(int beta, int N) {
  if (beta < 0) throw std::domain_error("kernel_derivative_coeffs: beta must be >= 0");
  double lam0 = 1.0 / std::sqrt(2.0 + beta);
  // k(z, lam0) = sum_n C(n+beta+1, n) lam0^n z^n; differentiate termwise and
  // multiply by lam0: out[n] = (n+1) C(n+beta+2, n+1) lam0^{n+2}.
  std::vector<Complex> out(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    double binom = 1.0;  // C(n+beta+2, n+1) = prod_{j=1}^{beta+1} (n+1+j)/j
    for (int j = 1; j <= beta + 1; ++j)
      binom *= (static_cast<double>(n) + 1.0 + j) / static_cast<double>(j);
    out[static_cast<std::size_t>(n)] =
        (static_cast<double>(n) + 1.0) * binom * std::pow(lam0, n + 2);
  }
  CoeffSeries s(std::move(out));
  s.tail_bound = bergman_extremal(beta, N).tail_bound;
  return s;
}

CoeffSeries bergman_eigenfunction(double beta, int m, int N) {
  if (beta <= -1.0) throw std::domain_error("bergman_eigenfunction: beta must exceed -1");
  if (m < 0) throw std::domain_error("bergman_eigenfunction: m must be nonnegative");
  double md = m;
  double c1 = std::sqrt((md + beta + 2.0) / (md + 1.0));
  double c2 = 1.0 / c1;
  CoeffSeries tail = negative_binomial_series(c2, md + 3.0 + beta, N);
  // Finite factor (1 - c1 z)^m.
  std::vector<double> head(static_cast<std::size_t>(m) + 1);
  double b = 1.0;
  head[0] = 1.0;
  for (int j = 1; j <= m; ++j) {
    b *= -c1 * static_cast<double>(m - j + 1) / static_cast<double>(j);
    head[static_cast<std::size_t>(j)] = b;
  }
  std::vector<Complex> out(static_cast<std::size_t>(N) + 1, Complex(0.0));
  for (int n = 0; n <= N; ++n) {
    Complex s = 0.0;
    for (int j = 0; j <= std::min(m, n); ++j)
      s += head[static_cast<std::size_t>(j)] * tail.coeffs[static_cast<std::size_t>(n - j)];
    out[static_cast<std::size_t>(n)] = s;
  }
  // Head factor has l1 norm (1 + c1)^m.
  double head_l1 = std::pow(1.0 + c1, m);
  return CoeffSeries(std::move(out), head_l1 * tail.tail_bound);
}

DirichletBounds dirichlet_bounds(double alpha) {
  if (alpha >= 0.0) throw std::domain_error("dirichlet_bounds: alpha must be negative");
  return {std::pow(1.5, alpha / 2.0), 2.0 * std::pow(2.0 / 3.0, alpha / 2.0)};
}

double dirichlet_indicial_exponent(int n, double normJ) {
  if (n < 1) throw std::domain_error("dirichlet_indicial_exponent: n must be positive");
  if (!(normJ > 2.0)) throw std::domain_error("dirichlet_indicial_exponent: norm must exceed 2");
  double nd = n;
  return nd / 2.0 - 3.0 - nd * normJ / (2.0 * std::sqrt(normJ * normJ - 4.0));
}

std::vector<Complex> hardy_beta_approximant(Complex a, int n) {
  if (!(a.real() > 0.0)) throw std::domain_error("hardy_beta_approximant: Re a must be positive");
  Complex ab = std::conj(a);
  std::vector<Complex> p(static_cast<std::size_t>(n) + 1);
  Complex lgA = log_gamma(a);
  Complex lbTop = log_beta(static_cast<double>(n) + a + 1.0, ab);
  for (int k = 0; k <= n; ++k) {
    Complex lg = log_gamma(a + static_cast<double>(k)) - lgA -
                 log_gamma(Complex(static_cast<double>(k) + 1.0)) + lbTop -
                 log_beta(Complex(static_cast<double>(n - k) + 1.0), ab);
    p[static_cast<std::size_t>(k)] = std::exp(lg);
  }
  return p;
}

}  // namespace opa
