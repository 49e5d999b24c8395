#include "opa/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace opa {

namespace {

constexpr double kBisectTol = 1e-12;

double gershgorin_bound(const JacobiTruncation& J) {
  const auto& c = J.offdiag;
  if (c.empty()) return 1.0;
  double g = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) g = std::max(g, c[i] + c[i + 1]);
  g = std::max({g, c.front(), c.back()});
  return g;
}

}  // namespace

JacobiTruncation jacobi_truncation(const WeightSequence& w, std::size_t N) {
  if (N < 1) throw std::domain_error("jacobi_truncation: N must be >= 1");
  JacobiTruncation J;
  J.offdiag.resize(N - 1);
  for (std::size_t k = 1; k < N; ++k) J.offdiag[k - 1] = std::sqrt(w(k) / w(k + 1));
  return J;
}

std::size_t sturm_count_below(const JacobiTruncation& J, double x) {
  std::size_t count = 0;
  double d = -x;
  if (d == 0.0) d = -1e-300;  // zero pivots count as negative (x hits a minor)
  if (d < 0.0) ++count;
  for (double c : J.offdiag) {
    d = -x - c * c / d;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

double truncated_eigenvalue(const JacobiTruncation& J, std::size_t index) {
  std::size_t N = J.size();
  if (index >= N) throw std::domain_error("truncated_eigenvalue: index out of range");
  double hi = gershgorin_bound(J) + 1.0;
  double lo = -hi;
  std::size_t want = N - index;  // eigenvalue of descending index
  while (hi - lo > kBisectTol) {
    double mid = 0.5 * (lo + hi);
    if (sturm_count_below(J, mid) >= want)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double truncated_norm(const WeightSequence& w, std::size_t N) {
  JacobiTruncation J = jacobi_truncation(w, N);
  if (N == 1) return 0.0;
  return truncated_eigenvalue(J, 0);
}

NormEstimate norm_estimate(const WeightSequence& w, double tol, std::size_t cap) {
  if (!(tol > 0.0)) throw std::domain_error("norm_estimate: tol must be positive");
  std::size_t N = 64;
  double prev = truncated_norm(w, N);
  while (true) {
    std::size_t next = 2 * N;
    if (next > cap) throw NonConvergenceError(prev, N);
    double cur = truncated_norm(w, next);
    if (std::abs(cur - prev) < tol) return {cur, next};
    prev = cur;
    N = next;
  }
}

std::vector<double> monic_recurrence(const WeightSequence& w, double t, std::size_t N) {
  std::vector<double> P(N + 1);
  long double prev2 = 1.0L;
  long double prev1 = t;
  P[0] = 1.0;
  if (N >= 1) P[1] = t;
  for (std::size_t j = 2; j <= N; ++j) {
    long double ratio = static_cast<long double>(w(j - 1)) / static_cast<long double>(w(j));
    long double cur = static_cast<long double>(t) * prev1 - ratio * prev2;
    P[j] = static_cast<double>(cur);
    prev2 = prev1;
    prev1 = cur;
  }
  return P;
}

CoeffSeries extremal_coeffs(const WeightSequence& w, std::size_t N, double tol, double margin) {
  NormEstimate est = norm_estimate(w, tol);
  if (!(est.value > 2.0 + margin)) throw NoExtremalFunction();
  double t = est.value;
  // The extremal coefficients are the decaying solution of the three-term
  // recurrence.  Forward recursion is unstable (the rounding of t excites the
  // growing solution at rate lambda_+/lambda_-), so run it backward from a
  // buffer past N and normalize to P_0 = 1 (Miller's algorithm).
  std::size_t M = 2 * N + 128;
  std::vector<long double> y(M + 2, 0.0L);
  y[M] = 1.0L;
  for (std::size_t j = M; j >= 1; --j) {
    long double r = static_cast<long double>(w(j)) / static_cast<long double>(w(j + 1));
    y[j - 1] = (static_cast<long double>(t) * y[j] - y[j + 1]) / r;
    if (std::abs(y[j - 1]) > 1e280L)
      for (std::size_t i = j - 1; i <= M + 1; ++i) y[i] *= 1e-280L;
  }
  std::vector<double> P(N + 1);
  for (std::size_t n = 0; n <= N; ++n) P[n] = static_cast<double>(y[n] / y[0]);
  CoeffSeries out = CoeffSeries::real(P);
  // Geometric tail from the subdominant recurrence rate t_-.
  double q = 0.5 * (t - std::sqrt(t * t - 4.0));
  double sup_w = 0.0;
  for (std::size_t n = N + 1; n <= N + 1000; ++n) sup_w = std::max(sup_w, w(n));
  out.tail_bound = std::abs(P[N]) * std::sqrt(sup_w) * q / std::sqrt(1.0 - q * q);
  return out;
}

std::vector<double> point_spectrum_above_2(const WeightSequence& w, double tol,
                                           std::size_t max_count, std::size_t cap) {
  if (max_count == 0) return {};
  double thresh = 2.0 + 10.0 * tol;
  auto candidates = [&](std::size_t n) {
    JacobiTruncation J = jacobi_truncation(w, n);
    std::size_t above = n - sturm_count_below(J, thresh);
    std::vector<double> v;
    std::size_t take = std::min(above, max_count + 2);
    for (std::size_t j = 0; j < take; ++j) {
      double lam = truncated_eigenvalue(J, j);
      if (lam > thresh) v.push_back(lam);
    }
    return v;
  };
  std::size_t N = 256;
  std::vector<double> prev = candidates(N);
  while (true) {
    std::size_t next = 2 * N;
    if (next > cap) throw NonConvergenceError(prev.empty() ? 0.0 : prev.front(), N);
    std::vector<double> cur = candidates(next);
    std::size_t m = std::min(max_count, cur.size());
    bool stable = prev.size() >= m;
    for (std::size_t i = 0; stable && i < m; ++i)
      stable = std::abs(cur[i] - prev[i]) < tol;
    if (stable) {
      cur.resize(m);
      return cur;
    }
    prev = std::move(cur);
    N = next;
  }
}

double power_iteration_top(const WeightSequence& w, std::size_t N1, double tol,
                           std::size_t max_iters) {
  JacobiTruncation J = jacobi_truncation(w, N1);
  std::size_t n = J.size();
  double shift = gershgorin_bound(J) + 1.0;  // makes lambda_max + shift dominant
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> u(n);
  double rq_prev = 0.0;
  for (std::size_t it = 0; it < max_iters; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = shift * v[i];
      if (i > 0) s += J.offdiag[i - 1] * v[i - 1];
      if (i + 1 < n) s += J.offdiag[i] * v[i + 1];
      u[i] = s;
    }
    double norm = 0.0;
    for (double x : u) norm += x * x;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / norm;
    double rq = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) rq += 2.0 * J.offdiag[i] * v[i] * v[i + 1];
    if (it > 0 && std::abs(rq - rq_prev) < tol) return rq;
    rq_prev = rq;
  }
  return rq_prev;
}

std::vector<double> attainment_partial_sums(const WeightSequence& w, std::size_t N) {
  std::vector<double> P = monic_recurrence(w, 2.0, N);
  std::vector<double> sums(N + 1);
  double s = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    s += w(n) * P[n] * P[n];
    sums[n] = s;
  }
  return sums;
}

}  // namespace opa
