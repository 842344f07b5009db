#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irsmimo/rng.hpp"
#include "irsmimo/steering.hpp"
#include "support/oracles.hpp"

using namespace irsmimo;

TEST_CASE("single element response is the scalar 1") {
  const SteeringVector v = array_response(1, 0.7);
  REQUIRE(v.size() == 1);
  CHECK(v.entries[0].real() == doctest::Approx(1.0));
  CHECK(v.entries[0].imag() == doctest::Approx(0.0));
}

TEST_CASE("broadside response is constant") {
  const SteeringVector v = array_response(4, 0.0);
  for (int n = 0; n < 4; ++n) {
    CHECK(v.entries[n].real() == doctest::Approx(0.5));
    CHECK(std::abs(v.entries[n].imag()) < 1e-15);
  }
}

TEST_CASE("endfire two-element response alternates sign") {
  const SteeringVector v = array_response(2, kPi / 2);
  const double scale = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v.entries[0] - Complex(scale, 0.0)) < 1e-12);
  CHECK(std::abs(v.entries[1] - Complex(-scale, 0.0)) < 1e-12);
}

TEST_CASE("zero elements rejected") {
  CHECK_THROWS_AS(array_response(0, 0.1), std::invalid_argument);
}

TEST_CASE("responses have unit norm and the stated entry phases") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int count = 1 + static_cast<int>(rng.uniform() * 256);
    const double angle = rng.azimuth();
    const SteeringVector v = array_response(count, angle);
    CHECK(std::abs(v.entries.norm() - 1.0) < 1e-12);
    const int n = static_cast<int>(rng.uniform() * count);
    const Complex expected =
        std::polar(1.0 / std::sqrt(double(count)), kTwoPi * 0.5 * n * std::sin(angle));
    CHECK(std::abs(v.entries[n] - expected) < 1e-12);
  }
}

TEST_CASE("inner product of identical responses is 1") {
  const SteeringVector v = array_response(33, -0.4);
  const Complex product = steering_inner_product(v, v);
  CHECK(std::abs(product - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("two-element quarter-turn pair is orthogonal") {
  // sines 0 and 1 -> phase step pi, so the two terms cancel: |cos(pi/2)| = 0.
  const SteeringVector v1 = array_response(2, 0.0);
  const SteeringVector v2 = array_response(2, kPi / 2);
  CHECK(std::abs(steering_inner_product(v1, v2)) < 1e-12);
}

TEST_CASE("length mismatch rejected") {
  const SteeringVector v1 = array_response(4, 0.0);
  const SteeringVector v2 = array_response(5, 0.0);
  CHECK_THROWS_AS(steering_inner_product(v1, v2), std::invalid_argument);
}

TEST_CASE("inner product magnitude follows the closed form") {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int count = 1 + static_cast<int>(rng.uniform() * 512);
    const double a1 = rng.azimuth();
    const double a2 = rng.azimuth();
    const SteeringVector v1 = array_response(count, a1);
    const SteeringVector v2 = array_response(count, a2);
    const double magnitude = std::abs(steering_inner_product(v1, v2));
    const double delta = std::sin(a2) - std::sin(a1);
    CHECK(std::abs(magnitude - dirichlet_magnitude(count, 0.5, delta)) < 1e-10);
    CHECK(std::abs(magnitude - oracles::dirichlet_direct_sum(count, 0.5, delta)) < 1e-10);
  }
}

TEST_CASE("large-array off-peak inner product obeys the kernel bound") {
  // sine gap 0.3 at 1024 elements: the magnitude cannot exceed
  // 1 / (M * spacing * delta) by the small-angle bound on the denominator.
  const int count = 1024;
  const double delta = 0.3;
  const double direct = oracles::dirichlet_direct_sum(count, 0.5, delta);
  const double bound = 1.0 / (count * 0.5 * delta);
  CHECK(direct <= bound);
  CHECK(std::abs(direct - dirichlet_magnitude(count, 0.5, delta)) < 1e-10);

  SteeringVector v1 = array_response(count, 0.0);
  SteeringVector v2 = array_response(count, std::asin(delta));
  CHECK(std::abs(steering_inner_product(v1, v2)) <= bound);
}
