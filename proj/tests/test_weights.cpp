#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "opa/weights.hpp"

using namespace opa;

TEST_CASE("dirichlet weight values") {
  CHECK(dirichlet_weight(0.0, 7) == 1.0);
  CHECK(dirichlet_weight(1.0, 1) == 2.0);
  CHECK(dirichlet_weight(-1.0, 3) == 0.25);
}

TEST_CASE("bergman weight values") {
  CHECK(bergman_weight(0.0, 4) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(bergman_weight(1.0, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(bergman_weight(2.0, 0) == 1.0);
  CHECK_THROWS_AS(bergman_weight(-1.0, 3), std::domain_error);
  CHECK_THROWS_AS(bergman_weight(-1.5, 0), std::domain_error);
}

TEST_CASE("weight ratios") {
  CHECK(weight_ratio(WeightSequence::hardy(), 5) == 1.0);
  // w_1 / w_2 = (1/2) / (1/3) = 3/2
  CHECK(weight_ratio(WeightSequence::dirichlet(-1.0), 1) ==
        doctest::Approx(1.5).epsilon(1e-15));
  CHECK(weight_ratio(WeightSequence::bergman(0.0), 1) ==
        doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("evaluation is pure") {
  WeightSequence w = WeightSequence::bergman(1.7);
  for (std::size_t n : {0u, 3u, 100u, 4321u}) CHECK(w(n) == w(n));
}

TEST_CASE("dirichlet(-1) coincides with bergman(0)") {
  WeightSequence d = WeightSequence::dirichlet(-1.0);
  WeightSequence b = WeightSequence::bergman(0.0);
  for (std::size_t n = 0; n <= 10000; ++n) CHECK(d(n) == b(n));
}

TEST_CASE("ratio tends to 1 for parametric kinds") {
  // |ratio - 1| ~ |alpha| / n, so the usable constant scales with the
  // parameter; at |alpha| = 12 the small-n ratios genuinely exceed 10/(n+1).
  std::vector<WeightSequence> mild = {WeightSequence::dirichlet(-1.0),
                                      WeightSequence::dirichlet(2.0),
                                      WeightSequence::bergman(-0.5),
                                      WeightSequence::bergman(0.0),
                                      WeightSequence::bergman(3.0)};
  for (const WeightSequence& w : mild)
    for (std::size_t n = 1; n <= 100000; n = n * 3 + 1)
      CHECK(std::abs(w.ratio(n) - 1.0) < 10.0 / (n + 1));
  for (double alpha : {-12.0, 12.0}) {
    WeightSequence w = WeightSequence::dirichlet(alpha);
    for (std::size_t n = 100; n <= 100000; n = n * 3 + 1)
      CHECK(std::abs(w.ratio(n) - 1.0) < 14.0 / (n + 1));
  }
}

TEST_CASE("custom weights: ratio tail") {
  WeightSequence w = WeightSequence::custom({1.0, 0.8, 0.7}, TailRule{TailRule::Type::Ratio, 0.9});
  CHECK(w(0) == 1.0);
  CHECK(w(1) == 0.8);
  CHECK(w(2) == 0.7);
  CHECK(w(3) == doctest::Approx(0.63).epsilon(1e-15));
  CHECK(w(5) == doctest::Approx(0.7 * 0.9 * 0.9 * 0.9).epsilon(1e-15));
}

TEST_CASE("custom weights: power tail") {
  TailRule tail;
  tail.type = TailRule::Type::Power;
  tail.scale = 3.0;
  tail.exponent = -1.0;
  WeightSequence w = WeightSequence::custom({1.0, 1.0}, tail);
  CHECK(w(3) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("custom weights validation") {
  // prefix must start at exactly 1
  CHECK_THROWS(WeightSequence::custom({0.9, 0.5}, TailRule{TailRule::Type::Ratio, 1.0}));
  // positivity
  CHECK_THROWS(WeightSequence::custom({1.0, -0.5}, TailRule{TailRule::Type::Ratio, 1.0}));
  // ratio admission gate |w_n/w_{n+1} - 1| < 0.5
  CHECK_THROWS(WeightSequence::custom({1.0, 0.1}, TailRule{TailRule::Type::Ratio, 1.0}));
  // geometric tails with ratio far from 1 violate the gate at infinity
  CHECK_THROWS(WeightSequence::custom({1.0}, TailRule{TailRule::Type::Ratio, 0.5}));
  // declared start index can skip a rough prefix
  CHECK_NOTHROW(
      WeightSequence::custom({1.0, 0.1, 0.09}, TailRule{TailRule::Type::Ratio, 0.99}, 1));
}

TEST_CASE("strictly_decreasing") {
  CHECK(WeightSequence::bergman(0.0).strictly_decreasing(50));
  CHECK_FALSE(WeightSequence::hardy().strictly_decreasing(5));
  CHECK_FALSE(WeightSequence::dirichlet(1.0).strictly_decreasing(5));
}
