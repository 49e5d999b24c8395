#include "opa/gram.hpp"

#include <algorithm>
#include <cmath>

namespace opa {

namespace {

// <z^j f, z^k f>_w = sum_n f_{n-j} conj(f_{n-k}) w_n.
Complex gram_entry(const CoeffSeries& f, const WeightSequence& w, int j, int k) {
  int M = f.degree();
  Complex s = 0.0;
  int lo = std::max(j, k);
  int hi = M + std::min(j, k);
  for (int n = lo; n <= hi; ++n)
    s += f.coeffs[static_cast<std::size_t>(n - j)] *
         std::conj(f.coeffs[static_cast<std::size_t>(n - k)]) * w(static_cast<std::size_t>(n));
  return s;
}

HermitianMatrix gram_common(const CoeffSeries& f, const WeightSequence& w, int n, bool parallel) {
  if (f.is_zero()) throw std::domain_error("gram_matrix: f must not be the zero series");
  HermitianMatrix G(static_cast<std::size_t>(n) + 1,
                    std::vector<Complex>(static_cast<std::size_t>(n) + 1));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int j = 0; j <= n; ++j) {
    for (int k = j; k <= n; ++k) {
      Complex v = gram_entry(f, w, j, k);
      G[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = v;
      G[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = std::conj(v);
    }
  }
  return G;
}

}  // namespace

HermitianMatrix gram_matrix(const CoeffSeries& f, const WeightSequence& w, int n) {
  return gram_common(f, w, n, true);
}

HermitianMatrix gram_matrix_serial(const CoeffSeries& f, const WeightSequence& w, int n) {
  return gram_common(f, w, n, false);
}

std::vector<Complex> solve_hermitian(HermitianMatrix G, std::vector<Complex> b) {
  constexpr double kPivotFloor = 1e-14;
  std::size_t n = G.size();
  // In-place LL^H.
  for (std::size_t i = 0; i < n; ++i) {
    double d = G[i][i].real();
    for (std::size_t k = 0; k < i; ++k) d -= std::norm(G[i][k]);
    if (d < kPivotFloor) throw ConditioningError(d);
    double l = std::sqrt(d);
    G[i][i] = l;
    for (std::size_t j = i + 1; j < n; ++j) {
      Complex s = std::conj(G[i][j]);
      for (std::size_t k = 0; k < i; ++k) s -= G[j][k] * std::conj(G[i][k]);
      G[j][i] = s / l;
    }
  }
  // Forward then back substitution.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) b[i] -= G[i][k] * b[k];
    b[i] /= G[i][i].real();
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) b[ii] -= std::conj(G[k][ii]) * b[k];
    b[ii] /= G[ii][ii].real();
  }
  return b;
}

Approximant optimal_approximant(const CoeffSeries& f, const WeightSequence& w, int n) {
  Approximant out;
  out.degree = n;
  if (f.is_zero()) throw std::domain_error("optimal_approximant: f must not be zero");
  Complex f0 = f.at(0);
  if (f0 == Complex(0.0)) {
    // 1 is orthogonal to f * P_n at these degrees; the projection is 0.
    out.coeffs.assign(static_cast<std::size_t>(n) + 1, Complex(0.0));
    out.residual_norm = 1.0;
    return out;
  }
  HermitianMatrix G = gram_matrix(f, w, n);
  if (f.tail_bound > 0.0) {
    double min_diag = G[0][0].real();
    for (std::size_t i = 1; i < G.size(); ++i) min_diag = std::min(min_diag, G[i][i].real());
    // Conservative per-entry truncation error: cross terms plus tail square.
    double fnorm = 0.0;
    for (Complex c : f.coeffs) fnorm += std::norm(c);
    fnorm = std::sqrt(fnorm);
    double entry_err = f.tail_bound * (2.0 * fnorm + f.tail_bound);
    if (!(entry_err < 1e-8 * min_diag))
      throw std::runtime_error(
          "optimal_approximant: truncation tail too large for requested degree");
  }
  std::vector<Complex> b(static_cast<std::size_t>(n) + 1, Complex(0.0));
  // Minimizing ||p f - 1|| gives G conj(c) = f(0) e_0: the unknown enters the
  // residual inner product conjugated, so solve and conjugate back.
  b[0] = f0;
  out.coeffs = solve_hermitian(std::move(G), std::move(b));
  for (Complex& c : out.coeffs) c = std::conj(c);
  // ||p f - 1||^2 = 1 - <p f, 1> = 1 - Re(c_0 f(0)) for the projection.
  double r2 = 1.0 - (out.coeffs[0] * f0).real();
  out.residual_norm = std::sqrt(std::max(0.0, r2));
  return out;
}

double residual_direct(const std::vector<Complex>& p, const CoeffSeries& f,
                       const WeightSequence& w) {
  std::size_t m = p.size() + f.coeffs.size() - 1;
  std::vector<Complex> pf(m, Complex(0.0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) pf[i + j] += p[i] * f.coeffs[j];
  pf[0] -= 1.0;
  return weighted_norm(CoeffSeries(std::move(pf)), w);
}

std::optional<Complex> first_order_zero(const CoeffSeries& f, const WeightSequence& w) {
  CoeffSeries zf = shift(f, 1);
  Complex den = weighted_inner(f, zf, w);
  double num = weighted_inner(zf, zf, w).real();
  if (std::abs(den) == 0.0) return std::nullopt;
  return Complex(num) / den;
}

}  // namespace opa
