#include "opa/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace opa {

CoeffSeries CoeffSeries::real(const std::vector<double>& c, double tail) {
  std::vector<Complex> v(c.size());
  std::transform(c.begin(), c.end(), v.begin(), [](double x) { return Complex(x, 0.0); });
  return CoeffSeries(std::move(v), tail);
}

bool CoeffSeries::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c == Complex(0.0); });
}

Complex weighted_inner(const CoeffSeries& f, const CoeffSeries& g, const WeightSequence& w) {
  std::size_t m = std::min(f.coeffs.size(), g.coeffs.size());
  Complex s = 0.0;
  for (std::size_t n = 0; n < m; ++n) s += f.coeffs[n] * std::conj(g.coeffs[n]) * w(n);
  return s;
}

double weighted_norm(const CoeffSeries& f, const WeightSequence& w) {
  double s = 0.0;
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) s += std::norm(f.coeffs[n]) * w(n);
  return std::sqrt(s);
}

CoeffSeries shift(const CoeffSeries& f, std::size_t k) {
  CoeffSeries out;
  out.tail_bound = f.tail_bound;
  out.coeffs.assign(f.coeffs.size() + k, Complex(0.0));
  std::copy(f.coeffs.begin(), f.coeffs.end(), out.coeffs.begin() + static_cast<long>(k));
  return out;
}

double theta(const std::vector<double>& a, const WeightSequence& w) {
  if (std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; }))
    throw std::domain_error("theta: zero vector");
  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    double wn1 = w(n + 1);
    den += a[n] * a[n] * wn1;
    if (n + 1 < a.size()) num += a[n] * a[n + 1] * wn1;
  }
  if (num == 0.0) return 0.0;
  return num / den;
}

double theta(const CoeffSeries& f, const WeightSequence& w) {
  std::vector<double> a(f.coeffs.size());
  std::transform(f.coeffs.begin(), f.coeffs.end(), a.begin(),
                 [](Complex c) { return std::abs(c); });
  return theta(a, w);
}

CoeffSeries cayley_section(int n) {
  if (n < 1) throw std::domain_error("cayley_section: n must be >= 1");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(2.0));
  c[0] = 1.0;
  return CoeffSeries(std::move(c));
}

CoeffSeries t_omega_apply(const CoeffSeries& g, const WeightSequence& w) {
  CoeffSeries out = g;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j)
    out.coeffs[j] *= (w(j + 1) - w(j + 2)) / w(j + 2);
  return out;
}

double functional_residual(const CoeffSeries& f, double t, const WeightSequence& w) {
  int N = f.degree();
  if (N < 2) throw std::domain_error("functional_residual: need truncation degree >= 2");
  double worst = 0.0;
  for (int j = 0; j + 2 <= N; ++j) {
    Complex h = f.at(static_cast<std::size_t>(j));
    if (j >= 1) h -= t * f.at(static_cast<std::size_t>(j - 1));
    if (j >= 2) {
      std::size_t i = static_cast<std::size_t>(j - 2);
      h += f.at(i);
      h += (w(static_cast<std::size_t>(j) - 1) - w(static_cast<std::size_t>(j))) /
           w(static_cast<std::size_t>(j)) * f.at(i);
    }
    if (j == 0) h -= 1.0;
    worst = std::max(worst, std::abs(h));
  }
  return worst;
}

CoeffSeries binomial_series(Complex a, BinomialSign sign, int N) {
  if (sign == BinomialSign::Plus && a.real() <= 0.0)
    throw std::domain_error("binomial_series: Re a must be positive for (1-z)^a");
  Complex e = (sign == BinomialSign::Plus) ? a : -a;
  std::vector<Complex> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1.0;
  Complex cur = 1.0;
  for (int k = 1; k <= N; ++k) {
    cur *= (static_cast<double>(k - 1) - e) / static_cast<double>(k);
    c[static_cast<std::size_t>(k)] = cur;
  }
  double tail = 0.0;
  if (sign == BinomialSign::Plus) {
    // Integer exponents terminate; otherwise |c_n| ~ n^{-(Re a + 1)}.
    bool exact_poly = (a.imag() == 0.0) && (a.real() == std::floor(a.real())) &&
                      a.real() <= static_cast<double>(N);
    if (!exact_poly) {
      Complex ck = cur;
      double sum = 0.0;
      long L = N;
      long extra = std::max<long>(4L * N, 4000);
      for (long k = N + 1; k <= N + extra; ++k) {
        ck *= (static_cast<double>(k - 1) - e) / static_cast<double>(k);
        sum += std::norm(ck);
        L = k;
      }
      double p = 2.0 * (a.real() + 1.0);
      double rem = std::norm(ck) * static_cast<double>(L) / std::max(p - 1.0, 1e-3);
      tail = std::sqrt(sum + rem);
    }
  } else {
    // (1-z)^{-a} diverges on the circle; no trusted coefficient-l2 tail.
    tail = std::numeric_limits<double>::infinity();
  }
  return CoeffSeries(std::move(c), tail);
}

CoeffSeries negative_binomial_series(double c, double s, int N) {
  std::vector<Complex> b(static_cast<std::size_t>(N) + 1);
  double cur = 1.0;
  b[0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    cur *= c * (s + static_cast<double>(k - 1)) / static_cast<double>(k);
    b[static_cast<std::size_t>(k)] = cur;
  }
  double tail;
  double q = std::abs(c) * (s + static_cast<double>(N) + 1.0) / (static_cast<double>(N) + 2.0);
  if (q >= 1.0) {
    tail = std::numeric_limits<double>::infinity();
  } else {
    double sum = 0.0, term = cur;
    for (long k = N + 1; k <= N + 200000; ++k) {
      term *= c * (s + static_cast<double>(k - 1)) / static_cast<double>(k);
      double t2 = term * term;
      sum += t2;
      if (t2 < 1e-320) break;
    }
    tail = std::sqrt(sum);
  }
  return CoeffSeries(std::move(b), tail);
}

}  // namespace opa
