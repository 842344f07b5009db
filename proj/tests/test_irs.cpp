#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irsmimo/channel.hpp"
#include "irsmimo/irs.hpp"
#include "irsmimo/rng.hpp"
#include "support/oracles.hpp"

using namespace irsmimo;

TEST_CASE("zero phases give the identity reflection") {
  const ComplexMatrix matrix = reflection_matrix(linear_profile(0.0, 4));
  CHECK((matrix - ComplexMatrix::Identity(4, 4)).norm() < 1e-14);
}

TEST_CASE("half-turn phase flips the sign") {
  const ComplexMatrix matrix = reflection_matrix(make_profile({0.0, kPi}));
  CHECK(std::abs(matrix(0, 0) - Complex(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(matrix(1, 1) - Complex(-1.0, 0.0)) < 1e-14);
  CHECK(std::abs(matrix(0, 1)) == 0.0);
}

TEST_CASE("amplitude scales every diagonal entry") {
  const ComplexVector diagonal = reflection_diagonal(make_profile({0.1, 2.0, 4.0}, 0.5));
  for (int n = 0; n < 3; ++n) CHECK(std::abs(diagonal[n]) == doctest::Approx(0.5));
}

TEST_CASE("amplitude outside (0, 1] rejected") {
  CHECK_THROWS_AS(make_profile({0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_profile({0.0}, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_profile({0.0}, -0.3), std::invalid_argument);
}

TEST_CASE("phases are stored canonically in [0, 2pi)") {
  const PhaseProfile profile = make_profile({-0.5, 7.0, 100.0});
  for (double phase : profile.phases) {
    CHECK(phase >= 0.0);
    CHECK(phase < kTwoPi);
  }
}

TEST_CASE("unit-amplitude reflection is unitary") {
  Rng rng(5);
  std::vector<double> phases(64);
  for (double& phase : phases) phase = rng.uniform(0.0, kTwoPi);
  const ComplexMatrix matrix = reflection_matrix(make_profile(std::move(phases)));
  CHECK((matrix.adjoint() * matrix - ComplexMatrix::Identity(64, 64)).norm() < 1e-12);
}

TEST_CASE("single-element coupling has unit magnitude") {
  CHECK(std::abs(coupling(0.3, linear_profile(0.0, 1), -0.8)) == doctest::Approx(1.0));
}

TEST_CASE("matched slope couples perfectly") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int count = 1 + static_cast<int>(rng.uniform() * 512);
    const double incident = rng.azimuth();
    const double departure = rng.azimuth();
    const Complex xi = coupling(departure, optimal_phases(incident, departure, count), incident);
    CHECK(std::abs(std::norm(xi) - 1.0) < 1e-12);
  }
}

TEST_CASE("mismatched slope decays with the array size") {
  // fixed residual sine gap 0.2 at N = 10^4
  const int count = 10000;
  const double incident = 0.3;
  const double departure = -0.2;
  const double slope = std::sin(incident) - std::sin(departure) - 0.2;
  const Complex xi = coupling(departure, linear_profile(slope, count), incident);
  CHECK(std::norm(xi) <= 1e-3);
}

TEST_CASE("coupling matches the matrix algebra and the closed form") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int count = 1 + static_cast<int>(rng.uniform() * 512);
    const double incident = rng.azimuth();
    const double departure = rng.azimuth();
    const double slope = rng.uniform(-2.0, 2.0);
    const PhaseProfile profile = linear_profile(slope, count);

    const Complex xi = coupling(departure, profile, incident);
    const SteeringVector out = array_response(count, departure);
    const SteeringVector in = array_response(count, incident);
    const Complex via_matrix =
        (out.entries.adjoint() * reflection_matrix(profile) * in.entries)(0, 0);
    CHECK(std::abs(xi - via_matrix) < 1e-12);

    const double delta = std::sin(incident) - std::sin(departure) - slope;
    CHECK(std::abs(std::abs(xi) - dirichlet_magnitude(count, 0.5, delta)) < 1e-10);
  }
}

TEST_CASE("optimal phases reduce to the stated linear ramp") {
  const double incident = std::asin(0.5);
  const double departure = std::asin(-0.5);
  const PhaseProfile profile = optimal_phases(incident, departure, 3);
  CHECK(profile.phases[0] == doctest::Approx(0.0));
  CHECK(profile.phases[1] == doctest::Approx(kPi));
  CHECK(profile.phases[2] == doctest::Approx(0.0).scale(1.0));  // 2pi wraps to 0
  REQUIRE(profile.slope.has_value());
  CHECK(*profile.slope == doctest::Approx(1.0));
}

TEST_CASE("equal angles need no phase control") {
  const PhaseProfile profile = optimal_phases(0.7, 0.7, 8);
  for (double phase : profile.phases) CHECK(std::abs(phase) < 1e-12);
}

TEST_CASE("first element never needs a shift") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PhaseProfile profile = optimal_phases(rng.azimuth(), rng.azimuth(), 16);
    CHECK(profile.phases[0] == 0.0);
  }
}

TEST_CASE("integer slopes alias to a mirror") {
  const PhaseProfile profile = linear_profile(2.0, 6);
  for (double phase : profile.phases) CHECK(std::abs(phase) < 1e-9);
}

TEST_CASE("linear profile with the sine difference equals optimal phases") {
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const double incident = rng.azimuth();
    const double departure = rng.azimuth();
    const int count = 1 + static_cast<int>(rng.uniform() * 64);
    const PhaseProfile direct = optimal_phases(incident, departure, count);
    const PhaseProfile ramp =
        linear_profile(std::sin(incident) - std::sin(departure), count);
    for (int n = 0; n < count; ++n) CHECK(direct.phases[n] == ramp.phases[n]);
  }
}

namespace {

// Small two-subsurface scenario for the selection tests.
ScenarioConfig selection_config(int leg_paths) {
  ScenarioConfig config;
  config.tx_count = 8;
  config.rx_count = 8;
  config.elements = 16;
  config.subsurfaces = 2;
  config.tx_surface_paths = leg_paths;
  config.surface_rx_paths = leg_paths;
  config.trials = 1;
  return config;
}

}  // namespace

TEST_CASE("single-path subsurface selects the only candidate") {
  ScenarioConfig config = selection_config(1);
  config.tx_surface_k_db = std::numeric_limits<double>::infinity();
  config.surface_rx_k_db = std::numeric_limits<double>::infinity();
  Rng rng(3);
  const ChannelRealization realization = sample_link_realization(config, rng);
  const PathSelection selection = select_strongest_path(realization, 0);
  CHECK(selection.surface_to_rx_path == 1);
  CHECK(selection.tx_to_surface_path == 1);
}

TEST_CASE("line-of-sight dominated subsurfaces select the first pair") {
  ScenarioConfig config = selection_config(3);
  config.tx_surface_k_db = 30.0;  // scattered weights carry ~1/1000 of the power
  config.surface_rx_k_db = 30.0;
  Rng rng(9);
  const ChannelRealization realization = sample_link_realization(config, rng);
  for (int k = 0; k < 2; ++k) {
    const PathSelection selection = select_strongest_path(realization, k);
    CHECK(selection.surface_to_rx_path == 1);
    CHECK(selection.tx_to_surface_path == 1);
  }
}

TEST_CASE("selection matches exhaustive search over all pairs") {
  ScenarioConfig config = selection_config(3);
  config.tx_surface_k_db = 0.0;  // even split keeps the argmax random
  config.surface_rx_k_db = 0.0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng = Rng::for_trial(77, seed);
    const ChannelRealization realization = sample_link_realization(config, rng);
    const PathSelection selection = select_strongest_path(realization, 1);

    const SegmentChannel& to_surface = realization.tx_to_surface[1];
    const SegmentChannel& from_surface = realization.surface_to_rx[1];
    double best = -1.0;
    int best_i = 0, best_j = 0;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        const double metric = std::norm(from_surface.path_weight(i)) *
                              std::norm(to_surface.path_weight(j));
        if (metric > best) {
          best = metric;
          best_i = i;
          best_j = j;
        }
      }
    }
    CHECK(selection.surface_to_rx_path == best_i);
    CHECK(selection.tx_to_surface_path == best_j);
    CHECK(selection.slope == doctest::Approx(std::sin(to_surface.arrival(best_j)) -
                                             std::sin(from_surface.departure(best_i))));
  }
}

TEST_CASE("selection metric does not depend on any installed profile") {
  // The metric is defined from segment gains alone; recompute it and compare
  // against the per-path cascade gains divided by their couplings.
  ScenarioConfig config = selection_config(2);
  Rng rng(55);
  const ChannelRealization realization = sample_link_realization(config, rng);
  const PathSelection selection = select_strongest_path(realization, 0);

  std::vector<PhaseProfile> profiles{linear_profile(0.37, config.elements),
                                     linear_profile(-1.2, config.elements)};
  const PathDecomposition decomposition = path_decomposition(realization, profiles);
  const SegmentChannel& to_surface = realization.tx_to_surface[0];
  const SegmentChannel& from_surface = realization.surface_to_rx[0];
  const int i = selection.surface_to_rx_path, j = selection.tx_to_surface_path;
  const Complex xi =
      coupling(from_surface.departure(i), profiles[0], to_surface.arrival(j));
  const double via_quotient =
      std::norm(decomposition.surface_gains[0](i - 1, j - 1)) / std::norm(xi);
  CHECK(selection.metric == doctest::Approx(via_quotient).epsilon(1e-9));
}

TEST_CASE("common scaling of the fading leaves the argmax unchanged") {
  ScenarioConfig config = selection_config(3);
  Rng rng(91);
  ChannelRealization realization = sample_link_realization(config, rng);
  const PathSelection before = select_strongest_path(realization, 0);
  // Scaling every scattered gain of both legs by the same positive constant
  // moves the metric but not the argmax ordering within the scattered block;
  // scaling the attenuations rescales every pair identically.
  realization.tx_to_surface[0].attenuation_linear *= 17.0;
  realization.surface_to_rx[0].attenuation_linear *= 0.3;
  const PathSelection after = select_strongest_path(realization, 0);
  CHECK(before.surface_to_rx_path == after.surface_to_rx_path);
  CHECK(before.tx_to_surface_path == after.tx_to_surface_path);
}

TEST_CASE("missing subsurface rejected") {
  ScenarioConfig config = selection_config(1);
  Rng rng(1);
  const ChannelRealization realization = sample_link_realization(config, rng);
  CHECK_THROWS_AS(select_strongest_path(realization, 2), std::out_of_range);
}
