#include "opa/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace opa {

namespace {

constexpr int kMaxSweeps = 500;

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
  Complex v = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) v = v * z + static_cast<double>(i) * c[i];
  return v;
}

double scaled_residual(const std::vector<Complex>& c, Complex r) {
  double scale = 0.0, pw = 1.0;
  double m = std::max(1.0, std::abs(r));
  for (const Complex& ck : c) {
    scale += std::abs(ck) * pw;
    pw *= m;
  }
  return std::abs(horner(c, r)) / scale;
}

}  // namespace

RootSet poly_roots(const std::vector<Complex>& coeffs, double tol) {
  using std::numbers::pi;
  std::vector<Complex> c = coeffs;
  // Strip exact zero high-order coefficients.
  while (c.size() > 1 && c.back() == Complex(0.0)) c.pop_back();
  if (c.size() <= 1) {
    if (c.empty() || c[0] == Complex(0.0))
      throw std::domain_error("poly_roots: zero polynomial");
    return RootSet{{}, 0.0, 0};
  }
  // Zero constant terms are roots at the origin.
  std::size_t origin_mult = 0;
  while (c.size() > 1 && c.front() == Complex(0.0)) {
    c.erase(c.begin());
    ++origin_mult;
  }
  int deg = static_cast<int>(c.size()) - 1;
  RootSet out;
  out.degree_deflated = deg + static_cast<int>(origin_mult);
  out.roots.assign(origin_mult, Complex(0.0));
  if (deg == 0) return out;

  // Cauchy bound initial circle with a slight perturbation to break symmetry.
  double maxratio = 0.0;
  for (int k = 0; k < deg; ++k)
    maxratio = std::max(maxratio, std::abs(c[static_cast<std::size_t>(k)] / c.back()));
  double radius = 1.0 + maxratio;
  std::vector<Complex> z(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    double angle = 2.0 * pi * (i + 0.25) / deg + 0.42;
    z[static_cast<std::size_t>(i)] = 0.7 * radius * std::polar(1.0, angle);
  }

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (int i = 0; i < deg; ++i) {
      Complex zi = z[static_cast<std::size_t>(i)];
      Complex pv = horner(c, zi);
      Complex dv = horner_deriv(c, zi);
      if (pv == Complex(0.0)) continue;
      Complex ratio = (dv != Complex(0.0)) ? pv / dv : Complex(1.0);
      Complex sum = 0.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
      Complex denom = 1.0 - ratio * sum;
      Complex step = (denom != Complex(0.0)) ? ratio / denom : ratio;
      z[static_cast<std::size_t>(i)] = zi - step;
      if (std::abs(step) > tol * (1.0 + std::abs(zi))) converged = false;
    }
  }

  // Newton polish.
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      Complex dv = horner_deriv(c, r);
      if (dv == Complex(0.0)) break;
      r -= horner(c, r) / dv;
    }
  }

  double worst = 0.0;
  std::vector<double> residuals(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    residuals[i] = scaled_residual(c, z[i]);
    worst = std::max(worst, residuals[i]);
  }
  if (!converged && worst > tol) throw RootsError(std::move(z), std::move(residuals));

  out.roots.insert(out.roots.end(), z.begin(), z.end());
  out.max_residual = worst;
  return out;
}

RootSet poly_roots(const CoeffSeries& p, double tol) { return poly_roots(p.coeffs, tol); }

std::vector<std::vector<double>> monic_polynomials(const WeightSequence& w, std::size_t N) {
  std::vector<std::vector<double>> P(N + 1);
  P[0] = {1.0};
  if (N == 0) return P;
  P[1] = {0.0, 1.0};
  for (std::size_t j = 2; j <= N; ++j) {
    double ratio = w(j - 1) / w(j);
    std::vector<double> cur(j + 1, 0.0);
    for (std::size_t i = 0; i < P[j - 1].size(); ++i) cur[i + 1] += P[j - 1][i];
    for (std::size_t i = 0; i < P[j - 2].size(); ++i) cur[i] -= ratio * P[j - 2][i];
    P[j] = std::move(cur);
  }
  return P;
}

}  // namespace opa
