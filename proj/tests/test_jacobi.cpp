#include <stdexcept>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "opa/closedform.hpp"
#include "opa/jacobi.hpp"
#include "opa/verify.hpp"

using namespace opa;

namespace {
const WeightSequence kHardy = WeightSequence::hardy();
const WeightSequence kBerg0 = WeightSequence::bergman(0.0);
}  // namespace

TEST_CASE("truncated_norm closed cases") {
  CHECK(truncated_norm(kHardy, 2) == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t N = 1; N <= 8; ++N)
    CHECK(truncated_norm(kHardy, N) ==
          doctest::Approx(2.0 * std::cos(std::numbers::pi / (N + 1))).epsilon(1e-11));
  CHECK(std::abs(truncated_norm(kBerg0, 500) - 3.0 / std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("norm_estimate") {
  NormEstimate h = norm_estimate(kHardy, 1e-6);
  CHECK(h.value < 2.0);
  CHECK(h.value > 2.0 - 1e-4);
  NormEstimate b = norm_estimate(kBerg0, 1e-9);
  CHECK(std::abs(b.value - 3.0 / std::sqrt(2.0)) < 1e-8);
  NormEstimate d = norm_estimate(WeightSequence::dirichlet(-1.0), 1e-9);
  CHECK(d.value == b.value);  // identical weight sequences
}

TEST_CASE("monic_recurrence") {
  std::vector<double> p1 = monic_recurrence(kBerg0, 0.37, 1);
  CHECK(p1 == std::vector<double>{1.0, 0.37});
  std::vector<double> h = monic_recurrence(kHardy, 2.0, 5);
  CHECK(h == std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  std::vector<double> b = monic_recurrence(kBerg0, 3.0 / std::sqrt(2.0), 2);
  CHECK(b[2] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("extremal_coeffs") {
  CoeffSeries f = extremal_coeffs(kBerg0, 3, 1e-10);
  for (int n = 0; n <= 3; ++n) {
    double expect = 0.5 * (n + 1) * (n + 2) * std::pow(std::sqrt(0.5), n);
    CHECK(std::abs(f.coeffs[static_cast<std::size_t>(n)] - Complex(expect)) < 1e-7);
  }
  CHECK_THROWS_AS(extremal_coeffs(kHardy, 10, 1e-8), NoExtremalFunction);

  CoeffSeries d = extremal_coeffs(WeightSequence::dirichlet(-2.0), 50, 1e-8);
  double prev_ratio = 2.0;
  for (std::size_t n = 0; n <= 50; ++n) CHECK(d.coeffs[n].real() > 0.0);
  for (std::size_t n = 30; n < 50; ++n) {
    double r = d.coeffs[n + 1].real() / d.coeffs[n].real();
    CHECK(r < 1.0);
    prev_ratio = r;
  }
  CHECK(prev_ratio < 1.0);
}

TEST_CASE("point_spectrum_above_2") {
  CHECK(point_spectrum_above_2(kHardy, 1e-8, 4).empty());
  std::vector<double> b1 = point_spectrum_above_2(WeightSequence::bergman(1.0), 1e-8, 1);
  REQUIRE(b1.size() == 1);
  CHECK(std::abs(b1[0] - 4.0 / std::sqrt(3.0)) < 1e-7);
}

TEST_CASE("truncation monotonicity") {
  for (const WeightSequence& w :
       {kHardy, WeightSequence::dirichlet(-1.0), WeightSequence::dirichlet(1.0), kBerg0}) {
    double prev = 0.0;
    for (std::size_t N = 1; N <= 200; ++N) {
      double cur = truncated_norm(w, N);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("eigenvalue parity") {
  for (std::size_t N : {4u, 5u, 8u, 9u}) {
    JacobiTruncation J = jacobi_truncation(kBerg0, N);
    std::vector<double> ev(N);
    for (std::size_t j = 0; j < N; ++j) ev[j] = truncated_eigenvalue(J, j);
    for (std::size_t j = 0; j < N; ++j) CHECK(std::abs(ev[j] + ev[N - 1 - j]) < 1e-9);
    if (N % 2 == 1) CHECK(std::abs(ev[N / 2]) < 1e-9);
  }
}

TEST_CASE("Rayleigh equivalence: random vectors stay below, power iteration attains") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t N1 : {6u, 11u}) {
    double top = truncated_norm(kBerg0, N1) / 2.0;
    double best = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> a(N1);
      for (double& x : a) x = u(rng);
      best = std::max(best, theta(a, kBerg0));
    }
    CHECK(best <= top + 1e-12);
    CHECK(std::abs(power_iteration_top(kBerg0, N1) / 2.0 - top) < 1e-8);
  }
}

TEST_CASE("duality with the largest monic root") {
  for (const WeightSequence& w : {kBerg0, WeightSequence::dirichlet(-2.0)}) {
    for (std::size_t N1 : {6u, 11u, 21u})
      CHECK(std::abs(largest_monic_root(w, N1) - truncated_norm(w, N1)) < 1e-10);
  }
}

TEST_CASE("critical-point identity at spectrum points") {
  // Theta of the eigenfunction coefficient sequence equals t/2.  The closed
  // form is used at N=400: the forward recurrence at fixed t is unstable
  // there (rounding of t excites the growing solution), see the moderate-N
  // check below for the recurrence route.
  for (double beta : {0.0, 1.0}) {
    WeightSequence w = WeightSequence::bergman(beta);
    for (int m : {0, 1, 2}) {
      double t = bergman_tm(beta, m).t_m;
      CoeffSeries f = bergman_eigenfunction(beta, m, 400);
      std::vector<double> a(f.coeffs.size());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.coeffs[i].real();
      CHECK(std::abs(theta(a, w) - t / 2.0) < 1e-8);
    }
  }
  // Recurrence route, inside its stability window.
  double t0 = bergman_tm(0.0, 0).t_m;
  CHECK(std::abs(theta(monic_recurrence(kBerg0, t0, 60), kBerg0) - t0 / 2.0) < 1e-8);
}

TEST_CASE("attainment partial sums grow in the boundary regime") {
  std::vector<double> s = attainment_partial_sums(kHardy, 50);
  REQUIRE(s.size() == 51);
  for (std::size_t n = 1; n < s.size(); ++n) CHECK(s[n] >= s[n - 1]);
  CHECK(s.back() > s.front());
}
