#include <doctest.h>

#include <cmath>
#include <random>

#include "ffmea/errors.hpp"
#include "ffmea/fmea.hpp"
#include "ffmea/membership.hpp"
#include "oracles.hpp"

using namespace ffmea;

TEST_SUITE("membership") {

TEST_CASE("triangular membership piecewise values") {
  CHECK(triangular_membership(3.25, 1.0, 3.25, 5.5) == 1.0);
  CHECK(triangular_membership(1.0, 1.0, 3.25, 5.5) == 0.0);
  CHECK(triangular_membership(2.125, 1.0, 3.25, 5.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(triangular_membership(4.375, 1.0, 3.25, 5.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(triangular_membership(6.0, 1.0, 3.25, 5.5) == 0.0);
  CHECK(triangular_membership(0.0, 1.0, 3.25, 5.5) == 0.0);
}

TEST_CASE("triangular shoulders") {
  // a == b: flat at 1 to the left of the peak.
  CHECK(triangular_membership(-5.0, 1.0, 1.0, 3.25) == 1.0);
  CHECK(triangular_membership(1.0, 1.0, 1.0, 3.25) == 1.0);
  CHECK(triangular_membership(2.125, 1.0, 1.0, 3.25) == doctest::Approx(0.5));
  // b == c: flat at 1 to the right.
  CHECK(triangular_membership(12.0, 7.75, 10.0, 10.0) == 1.0);
  CHECK(triangular_membership(8.875, 7.75, 10.0, 10.0) == doctest::Approx(0.5));
}

TEST_CASE("triangular parameter errors") {
  CHECK_THROWS_AS(triangular_membership(0.0, 2.0, 1.0, 3.0), ParameterError);
  CHECK_THROWS_AS(triangular_membership(0.0, 1.0, 3.0, 2.0), ParameterError);
  CHECK_THROWS_AS(MembershipFunction::triangular(2.0, 1.0, 3.0), ParameterError);
  CHECK_THROWS_AS(MembershipFunction::triangular(1.0, 1.0, 1.0), ParameterError);
}

TEST_CASE("gaussian membership") {
  CHECK(gaussian_membership(500.0, 500.0, 30.0) == 1.0);
  // exp(-1/2) evaluated independently.
  CHECK(gaussian_membership(530.0, 500.0, 30.0) == doctest::Approx(0.60653065971263342).epsilon(1e-14));
  CHECK(gaussian_membership(470.0, 500.0, 30.0) == gaussian_membership(530.0, 500.0, 30.0));
  CHECK_THROWS_AS(gaussian_membership(1.0, 0.0, 0.0), ParameterError);
  CHECK_THROWS_AS(gaussian_membership(1.0, 0.0, -2.0), ParameterError);
  CHECK_THROWS_AS(MembershipFunction::gaussian(0.0, 0.0), ParameterError);
}

TEST_CASE("gaussian symmetry property") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> center(-500.0, 500.0);
  std::uniform_real_distribution<double> sigma(0.01, 200.0);
  std::uniform_real_distribution<double> delta(0.0, 600.0);
  for (int i = 0; i < 2000; ++i) {
    const double c = center(rng);
    const double s = sigma(rng);
    const double d = delta(rng);
    CHECK(std::abs(gaussian_membership(c + d, c, s) - gaussian_membership(c - d, c, s)) <= 1e-12);
  }
}

TEST_CASE("degrees stay in [0,1] and triangles ramp monotonically") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 500; ++i) {
    double p[3] = {u(rng), u(rng), u(rng)};
    std::sort(p, p + 3);
    if (p[0] == p[2]) continue;
    const auto mf = MembershipFunction::triangular(p[0], p[1], p[2]);
    double prev = -1.0;
    for (int k = 0; k <= 50; ++k) {
      const double x = p[0] + (p[1] - p[0]) * k / 50.0;
      const double y = mf(x);
      CHECK(y >= 0.0);
      CHECK(y <= 1.0);
      CHECK(y >= prev);
      prev = y;
    }
    prev = 2.0;
    for (int k = 0; k <= 50; ++k) {
      const double x = p[1] + (p[2] - p[1]) * k / 50.0;
      const double y = mf(x);
      CHECK(y <= prev);
      prev = y;
    }
    const auto g = MembershipFunction::gaussian(p[1], std::abs(p[2] - p[0]) + 0.1);
    const double y = g(u(rng));
    CHECK(y >= 0.0);
    CHECK(y <= 1.0);
  }
}

TEST_CASE("default partitions match the piecewise definition") {
  const auto s = default_severity();
  for (int i = 0; i <= 900; ++i) {
    const double x = 1.0 + i * 0.01;
    const auto fv = fuzzify(s, x);
    double sum = 0.0;
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(fv.degrees[k].degree == doctest::Approx(oracle::default_input_degree(k, x)).epsilon(1e-12));
      sum += fv.degrees[k].degree;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("fuzzify at centres, midpoints and outside the universe") {
  const auto s = default_severity();
  auto fv = fuzzify(s, 5.5);
  CHECK(*fv.degree("Moderate") == 1.0);
  CHECK(*fv.degree("VeryLow") == 0.0);
  CHECK(*fv.degree("Low") == 0.0);
  CHECK(*fv.degree("High") == 0.0);
  CHECK(*fv.degree("VeryHigh") == 0.0);
  CHECK_FALSE(fv.clamped);

  fv = fuzzify(s, 4.375);
  CHECK(std::abs(*fv.degree("Low") - 0.5) <= 1e-9);
  CHECK(std::abs(*fv.degree("Moderate") - 0.5) <= 1e-9);
  CHECK(*fv.degree("High") == 0.0);

  fv = fuzzify(s, 12.0);
  CHECK(fv.clamped);
  CHECK(fv.used == 10.0);
  CHECK(fv.input == 12.0);
  CHECK(*fv.degree("VeryHigh") == 1.0);
  CHECK(*fv.degree("High") == 0.0);

  fv = fuzzify(s, -3.0);
  CHECK(fv.clamped);
  CHECK(*fv.degree("VeryLow") == 1.0);
  CHECK_FALSE(fv.degree("Bogus").has_value());
}

TEST_CASE("fuzzify is pure") {
  const auto o = default_occurrence();
  for (double x : {1.0, 2.7, 6.1, 9.99}) {
    const auto a = fuzzify(o, x);
    const auto b = fuzzify(o, x);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (std::size_t k = 0; k < a.degrees.size(); ++k) CHECK(a.degrees[k].degree == b.degrees[k].degree);
  }
}

TEST_CASE("detection labels run from certain detection to undetectable") {
  const auto d = default_detection();
  CHECK(d.set(0).label == "VeryHigh");
  CHECK(d.set(4).label == "VeryLow");
  CHECK(*fuzzify(d, 1.0).degree("VeryHigh") == 1.0);
  CHECK(*fuzzify(d, 10.0).degree("VeryLow") == 1.0);
}

TEST_CASE("linguistic variable invariants") {
  const auto tri = MembershipFunction::triangular(0.0, 1.0, 2.0);
  CHECK_THROWS_AS(LinguisticVariable("X", {1.0, 1.0}, {{"A", tri}}), ParameterError);
  CHECK_THROWS_AS(LinguisticVariable("X", {0.0, 2.0}, {}), ParameterError);
  CHECK_THROWS_AS(LinguisticVariable("X", {0.0, 2.0}, {{"A", tri}, {"A", tri}}), ParameterError);
  CHECK_THROWS_AS(LinguisticVariable("X", {5.0, 9.0}, {{"A", tri}}), ParameterError);
  CHECK_NOTHROW(LinguisticVariable("X", {0.0, 2.0}, {{"A", tri}}));
}

TEST_CASE("default output sets") {
  const auto out = default_output();
  REQUIRE(out.size() == 5);
  const double centers[5] = {100.0, 300.0, 500.0, 700.0, 900.0};
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& g = std::get<Gaussian>(out.set(k).mf.shape());
    CHECK(g.center == doctest::Approx(centers[k]));
    CHECK(g.sigma == 30.0);
  }
  CHECK(out.set(2).label == "Medium");
}

}  // TEST_SUITE
