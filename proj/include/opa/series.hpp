#pragma once

#include <complex>
#include <vector>

#include "opa/weights.hpp"

namespace opa {

using Complex = std::complex<double>;

// A truncated Maclaurin series.  coeffs[n] is the coefficient of z^n.
// tail_bound is a declared bound on the norm of the discarded tail; it is
// computed against the coefficient l2 norm, which bounds the omega-norm
// whenever the tail weights do not exceed 1 (true for Hardy, Bergman-type
// and Dirichlet-type with nonpositive exponent).  tail_bound == 0 means the
// object is an exact polynomial.
struct CoeffSeries {
  std::vector<Complex> coeffs;
  double tail_bound = 0.0;

  CoeffSeries() = default;
  explicit CoeffSeries(std::vector<Complex> c, double tail = 0.0)
      : coeffs(std::move(c)), tail_bound(tail) {}
  static CoeffSeries real(const std::vector<double>& c, double tail = 0.0);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool exact() const { return tail_bound == 0.0; }
  Complex at(std::size_t n) const { return n < coeffs.size() ? coeffs[n] : Complex(0.0); }
  bool is_zero() const;
};

// <f, g>_w = sum_n a_n conj(b_n) w_n over the overlap of defined indices.
Complex weighted_inner(const CoeffSeries& f, const CoeffSeries& g, const WeightSequence& w);

// sqrt(<f, f>_w)
double weighted_norm(const CoeffSeries& f, const WeightSequence& w);

// z^k f: prepends k zero coefficients.
CoeffSeries shift(const CoeffSeries& f, std::size_t k);

// Rayleigh-type quotient on real coefficient vectors:
//   (sum_{n<N} a_n a_{n+1} w_{n+1}) / (sum_{n<=N} a_n^2 w_{n+1}).
// Throws std::domain_error on the all-zero vector.  Complex inputs are
// routed through moduli (see the overload below).
double theta(const std::vector<double>& a, const WeightSequence& w);
double theta(const CoeffSeries& f, const WeightSequence& w);

// Degree-n Taylor section of (1+z)/(1-z): [1, 2, 2, ..., 2].
CoeffSeries cayley_section(int n);

// Diagonal coefficient operator: coefficient j gets multiplied by
// (w_{j+1} - w_{j+2}) / w_{j+2}.
CoeffSeries t_omega_apply(const CoeffSeries& g, const WeightSequence& w);

// Max coefficient modulus over indices 0..N-2 of
//   f (z^2 - t z + 1) - 1 + z^2 T_w(f).
// The top two indices are excluded: multiplying a degree-N truncation by z^2
// pollutes exactly those.
double functional_residual(const CoeffSeries& f, double t, const WeightSequence& w);

enum class BinomialSign { Plus, Minus };

// (1 - z)^a for sign Plus (requires Re a > 0), (1 - z)^{-a} for sign Minus,
// truncated at degree N, via the ratio recurrence c_k = c_{k-1} (k-1-a)/k
// (exponent negated for the Minus variant).  For the Plus variant the tail
// bound is estimated from the coefficient decay.
CoeffSeries binomial_series(Complex a, BinomialSign sign, int N);

// (1 - c z)^{-s} truncated at degree N; tail bound from geometric decay when
// |c| (s + N) / (N + 1) < 1, otherwise marked untrusted (infinite bound).
CoeffSeries negative_binomial_series(double c, double s, int N);

}  // namespace opa
