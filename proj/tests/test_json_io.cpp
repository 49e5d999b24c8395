#include <cmath>

#include "doctest.h"
#include "opa/json_io.hpp"

using namespace opa;
using nlohmann::json;

TEST_CASE("series round trip") {
  CoeffSeries f({Complex(1.0, 0.0), Complex(-0.5, 2.0)}, 1e-9);
  json j = to_json(f);
  CHECK(j["re"] == json::array({1.0, -0.5}));
  CHECK(j["im"] == json::array({0.0, 2.0}));
  CHECK(j["tail_bound"] == 1e-9);
  CoeffSeries g = series_from_json(j);
  CHECK(g.coeffs == f.coeffs);
  CHECK(g.tail_bound == f.tail_bound);
}

TEST_CASE("exact polynomials serialize with a string marker") {
  CoeffSeries f = CoeffSeries::real({1.0, -1.0});
  json j = to_json(f);
  CHECK(j["tail_bound"] == "exact");
  CHECK(series_from_json(j).exact());
}

TEST_CASE("series with real part only") {
  CoeffSeries f = series_from_json(json{{"re", {3.0, 4.0}}});
  CHECK(f.coeffs == std::vector<Complex>{3.0, 4.0});
  CHECK(f.exact());
  CHECK_THROWS(series_from_json(json{{"re", {1.0}}, {"im", {0.0, 1.0}}}));
}

TEST_CASE("custom weights document") {
  json j = {{"prefix", {1.0, 0.8, 0.7}}, {"tail", {{"type", "ratio"}, {"ratio", 0.95}}}};
  WeightSequence w = weights_from_json(j);
  CHECK(w(1) == 0.8);
  CHECK(w(3) == doctest::Approx(0.7 * 0.95).epsilon(1e-15));

  json p = {{"prefix", {1.0}},
            {"tail", {{"type", "formula"}, {"scale", 1.0}, {"exponent", -0.5}}}};
  WeightSequence wp = weights_from_json(p);
  CHECK(wp(3) == doctest::Approx(0.5).epsilon(1e-15));

  // a tail rule is mandatory
  CHECK_THROWS(weights_from_json(json{{"prefix", {1.0, 0.9}}}));
  // unknown tail types are rejected
  CHECK_THROWS(weights_from_json(
      json{{"prefix", {1.0}}, {"tail", {{"type", "table"}}}}));
}

TEST_CASE("approximant serialization") {
  Approximant a;
  a.degree = 1;
  a.coeffs = {Complex(2.0 / 3.0), Complex(1.0 / 3.0)};
  a.residual_norm = std::sqrt(1.0 / 3.0);
  a.roots = {Complex(-2.0)};
  json j = to_json(a);
  CHECK(j["degree"] == 1);
  CHECK(j["coeffs"]["re"][0] == doctest::Approx(2.0 / 3.0));
  CHECK(j["residual_norm"] == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(j["roots"]["re"][0] == doctest::Approx(-2.0));
}
