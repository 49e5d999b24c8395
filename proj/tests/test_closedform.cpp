#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "opa/closedform.hpp"
#include "opa/gram.hpp"
#include "opa/jacobi.hpp"

using namespace opa;

TEST_CASE("bergman_tm") {
  BergmanSpectrumEntry e0 = bergman_tm(0.0, 0);
  CHECK(e0.t_m == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(bergman_tm(0.0, 1).t_m == doctest::Approx(5.0 / std::sqrt(6.0)).epsilon(1e-15));
  CHECK(bergman_tm(1.0, 0).t_m == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(e0.lambda_minus * e0.lambda_plus == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(bergman_tm(-1.0, 0), std::domain_error);
}

TEST_CASE("bergman_tm decreases to 2") {
  for (double beta : {-0.5, 0.0, 1.0, 3.0}) {
    double prev = bergman_tm(beta, 0).t_m;
    CHECK(prev > 2.0);
    for (int m = 1; m <= 10000; m = m * 3 + 1) {
      double cur = bergman_tm(beta, m).t_m;
      CHECK(cur < prev);
      CHECK(cur > 2.0);
      prev = cur;
    }
    CHECK(bergman_tm(beta, 10000).t_m == doctest::Approx(2.0).epsilon(1e-6));
  }
}

TEST_CASE("bergman_extremal") {
  CoeffSeries f = bergman_extremal(0.0, 2);
  CHECK(std::abs(f.coeffs[0] - Complex(1.0)) < 1e-15);
  CHECK(std::abs(f.coeffs[1] - Complex(3.0 / std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(f.coeffs[2] - Complex(3.0)) < 1e-14);
  CHECK(bergman_extremal(2.0, 0).coeffs == std::vector<Complex>{1.0});
  // cross-module identity with the recurrence at the estimated norm
  CoeffSeries g = extremal_coeffs(WeightSequence::bergman(0.0), 12, 1e-10);
  CoeffSeries h = bergman_extremal(0.0, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(std::abs(g.coeffs[n] - h.coeffs[n]) < 1e-6);
}

TEST_CASE("kernel_derivative_coeffs equals the extremal function") {
  for (int beta : {0, 1}) {
    CoeffSeries a = kernel_derivative_coeffs(beta, 5);
    CoeffSeries b = bergman_extremal(beta, 5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(std::abs(a.coeffs[n] - b.coeffs[n]) < 1e-12);
  }
  CHECK(std::abs(kernel_derivative_coeffs(0, 0).coeffs[0] - Complex(1.0)) < 1e-15);
}

TEST_CASE("bergman_eigenfunction") {
  // m = 0 reduces to the extremal function
  CoeffSeries e = bergman_eigenfunction(0.0, 0, 20);
  CoeffSeries f = bergman_extremal(0.0, 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(std::abs(e.coeffs[n] - f.coeffs[n]) < 1e-13);
  CHECK(std::abs(bergman_eigenfunction(0.0, 3, 10).coeffs[0] - Complex(1.0)) < 1e-15);
}

TEST_CASE("dirichlet_bounds") {
  DirichletBounds b1 = dirichlet_bounds(-1.0);
  CHECK(b1.zero_free_radius == doctest::Approx(std::pow(1.5, -0.5)).epsilon(1e-15));
  CHECK(b1.norm_upper == doctest::Approx(2.0 * std::sqrt(1.5)).epsilon(1e-14));
  DirichletBounds b2 = dirichlet_bounds(-2.0);
  CHECK(b2.zero_free_radius == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(b2.norm_upper == doctest::Approx(3.0).epsilon(1e-14));
  DirichletBounds b3 = dirichlet_bounds(-1e-9);
  CHECK(b3.zero_free_radius == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(b3.norm_upper == doctest::Approx(2.0).epsilon(1e-8));
  CHECK_THROWS_AS(dirichlet_bounds(0.5), std::domain_error);
}

TEST_CASE("dirichlet_indicial_exponent") {
  CHECK(dirichlet_indicial_exponent(1, 3.0 / std::sqrt(2.0)) ==
        doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(dirichlet_indicial_exponent(2, 2.5) ==
        doctest::Approx(-2.0 - 5.0 / 3.0).epsilon(1e-12));
  double normJ = norm_estimate(WeightSequence::dirichlet(-2.0), 1e-9).value;
  double r = dirichlet_indicial_exponent(2, normJ);
  CHECK(std::abs(r - std::round(r)) > 1e-3);  // reported non-integer
  CHECK_THROWS_AS(dirichlet_indicial_exponent(1, 2.0), std::domain_error);
}

TEST_CASE("hardy_beta_approximant closed values") {
  std::vector<Complex> p1 = hardy_beta_approximant(1.0, 1);
  CHECK(std::abs(p1[0] - Complex(2.0 / 3.0)) < 1e-13);
  CHECK(std::abs(p1[1] - Complex(1.0 / 3.0)) < 1e-13);
  std::vector<Complex> p2 = hardy_beta_approximant(1.0, 2);
  CHECK(std::abs(p2[0] - Complex(0.75)) < 1e-13);
  CHECK(std::abs(p2[1] - Complex(0.5)) < 1e-13);
  CHECK(std::abs(p2[2] - Complex(0.25)) < 1e-13);
  CHECK_THROWS_AS(hardy_beta_approximant(Complex(-0.5, 1.0), 2), std::domain_error);
}

TEST_CASE("hardy_beta_approximant against the normal equations") {
  WeightSequence hardy = WeightSequence::hardy();
  CoeffSeries f = binomial_series(2.0, BinomialSign::Plus, 2);
  Approximant p = optimal_approximant(f, hardy, 3);
  std::vector<Complex> q = hardy_beta_approximant(2.0, 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(std::abs(p.coeffs[k] - q[k]) < 1e-10);
}

TEST_CASE("hardy_beta_approximant positive and residual-monotone for real a") {
  for (double a : {0.7, 1.0, 2.5}) {
    for (int n : {1, 4, 9}) {
      std::vector<Complex> p = hardy_beta_approximant(a, n);
      for (const Complex& c : p) {
        CHECK(c.real() > 0.0);
        CHECK(std::abs(c.imag()) < 1e-12);
      }
    }
  }
}
