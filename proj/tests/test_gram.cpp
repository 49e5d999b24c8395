#include <cmath>
#include <random>

#include "doctest.h"
#include "opa/closedform.hpp"
#include "opa/gram.hpp"

using namespace opa;

namespace {
const WeightSequence kHardy = WeightSequence::hardy();
const WeightSequence kBerg0 = WeightSequence::bergman(0.0);
}  // namespace

TEST_CASE("gram_matrix small cases") {
  CoeffSeries f = CoeffSeries::real({1.0, -1.0});
  HermitianMatrix g = gram_matrix(f, kHardy, 1);
  CHECK(g[0][0] == Complex(2.0));
  CHECK(g[0][1] == Complex(-1.0));
  CHECK(g[1][0] == Complex(-1.0));
  CHECK(g[1][1] == Complex(2.0));

  HermitianMatrix d = gram_matrix(CoeffSeries::real({1.0}), kBerg0, 1);
  CHECK(d[0][0] == Complex(1.0));
  CHECK(d[0][1] == Complex(0.0));
  CHECK(d[1][1] == Complex(0.5));

  HermitianMatrix b = gram_matrix(f, kBerg0, 0);
  CHECK(b[0][0] == Complex(1.5));
}

TEST_CASE("gram_matrix rejects the zero function") {
  CHECK_THROWS_AS(gram_matrix(CoeffSeries::real({0.0, 0.0}), kHardy, 1), std::domain_error);
}

TEST_CASE("optimal_approximant closed cases") {
  Approximant p = optimal_approximant(CoeffSeries::real({1.0, -1.0}), kHardy, 1);
  CHECK(std::abs(p.coeffs[0] - Complex(2.0 / 3.0)) < 1e-14);
  CHECK(std::abs(p.coeffs[1] - Complex(1.0 / 3.0)) < 1e-14);

  Approximant q = optimal_approximant(CoeffSeries::real({1.0}), kBerg0, 4);
  CHECK(std::abs(q.coeffs[0] - Complex(1.0)) < 1e-14);
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(q.coeffs[static_cast<std::size_t>(k)]) < 1e-14);
  CHECK(q.residual_norm < 1e-12);

  // no constant term: projection of 1 onto f P_n is zero
  Approximant z = optimal_approximant(CoeffSeries::real({0.0, 1.0}), kHardy, 3);
  for (const Complex& c : z.coeffs) CHECK(c == Complex(0.0));
  CHECK(z.residual_norm == 1.0);
}

TEST_CASE("residual agrees with direct expansion and is monotone") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> a(6);
    for (Complex& x : a) x = Complex(u(rng), u(rng));
    a[0] += Complex(1.5, 0.0);  // keep f(0) well away from 0
    CoeffSeries f(a);
    double prev = 1.0 + 1e-12;
    for (int n = 0; n <= 8; ++n) {
      Approximant p = optimal_approximant(f, kBerg0, n);
      CHECK(p.residual_norm <= prev + 1e-10);
      CHECK(p.residual_norm <= 1.0 + 1e-12);
      CHECK(residual_direct(p.coeffs, f, kBerg0) == doctest::Approx(p.residual_norm).epsilon(1e-9));
      prev = p.residual_norm;
    }
  }
}

TEST_CASE("orthogonality of the residual against the subspace") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> a(5);
  for (Complex& x : a) x = Complex(u(rng), u(rng));
  a[0] += Complex(2.0, 0.0);
  CoeffSeries f(a);
  int n = 4;
  Approximant p = optimal_approximant(f, kBerg0, n);
  // p f - 1 as an explicit series
  std::vector<Complex> pf(a.size() + static_cast<std::size_t>(n), 0.0);
  for (std::size_t j = 0; j < p.coeffs.size(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i) pf[i + j] += p.coeffs[j] * a[i];
  pf[0] -= 1.0;
  CoeffSeries err(pf);
  for (int k = 0; k <= n; ++k)
    CHECK(std::abs(weighted_inner(err, shift(f, static_cast<std::size_t>(k)), kBerg0)) < 1e-10);
}

TEST_CASE("projection optimality against random competitors") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> a = {Complex(1.0), Complex(-0.6, 0.2), Complex(0.3, 0.1)};
  CoeffSeries f(a);
  int n = 3;
  Approximant p = optimal_approximant(f, kBerg0, n);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> q(static_cast<std::size_t>(n) + 1);
    for (Complex& x : q) x = Complex(u(rng), u(rng));
    CHECK(residual_direct(q, f, kBerg0) >= p.residual_norm - 1e-10);
  }
}

TEST_CASE("first_order_zero") {
  CHECK(std::abs(*first_order_zero(CoeffSeries::real({1.0, -1.0}), kHardy) - Complex(-2.0)) <
        1e-14);
  CoeffSeries fi({Complex(1.0), Complex(0.0, 1.0)});
  CHECK(std::abs(*first_order_zero(fi, kHardy) - Complex(0.0, -2.0)) < 1e-14);
  // orthogonal consecutive coefficients: degree-1 approximant is constant
  CHECK_FALSE(first_order_zero(CoeffSeries::real({1.0, 0.0, -1.0}), kHardy).has_value());
  // minimal modulus of the Bergman extremal function
  auto z = first_order_zero(bergman_extremal(0.0, 400), kBerg0);
  CHECK(std::abs(std::abs(*z) - 2.0 * std::sqrt(2.0) / 3.0) < 1e-8);
}

TEST_CASE("reciprocal absorption: 1/(z - z0) pins the first-order zero at z0") {
  double z0 = 1.7;
  int N = 200;
  std::vector<Complex> a(static_cast<std::size_t>(N) + 1);
  double cur = -1.0 / z0;
  for (int n = 0; n <= N; ++n) {
    a[static_cast<std::size_t>(n)] = cur;
    cur /= z0;
  }
  CoeffSeries f(a);
  CHECK(std::abs(*first_order_zero(f, kHardy) - Complex(z0)) < 1e-6);
}

TEST_CASE("untrusted tails are refused") {
  CoeffSeries f(std::vector<Complex>{1.0, -0.5}, 0.25);
  CHECK_THROWS_AS(optimal_approximant(f, kHardy, 2), std::runtime_error);
}

TEST_CASE("parallel and serial gram assembly agree bitwise") {
  CoeffSeries f = binomial_series(1.5, BinomialSign::Plus, 2000);
  HermitianMatrix a = gram_matrix(f, kBerg0, 12);
  HermitianMatrix b = gram_matrix_serial(f, kBerg0, 12);
  CHECK(a == b);
}
