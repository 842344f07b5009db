#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irsmimo/pathloss.hpp"
#include "support/oracles.hpp"

using namespace irsmimo;

TEST_CASE("deterministic sample at one decade") {
  Rng rng(1);
  const PathLossSample sample = sample_pathloss({61.4, 20.0, 10.0, 0.0}, rng);
  CHECK(sample.attenuation_db == doctest::Approx(81.4).epsilon(1e-12));
  CHECK(sample.attenuation_linear == doctest::Approx(db_to_linear(81.4)).epsilon(1e-12));
}

TEST_CASE("deterministic sample at the link distance") {
  Rng rng(1);
  const PathLossSample sample = sample_pathloss({72.0, 29.2, 51.0, 0.0}, rng);
  // 72 + 29.2*log10(51), evaluated independently
  CHECK(sample.attenuation_db == doctest::Approx(121.86104914205974).epsilon(1e-12));
}

TEST_CASE("shadowing std is reproduced empirically") {
  Rng rng(7);
  const PathLossParams params{72.0, 29.2, 51.0, 8.7};
  const int draws = 100000;
  std::vector<double> values(draws);
  for (double& value : values) value = sample_pathloss(params, rng).attenuation_db;
  CHECK(oracles::mean_of(values) ==
        doctest::Approx(median_pathloss_db(params)).epsilon(0.001));
  CHECK(oracles::stddev_of(values) == doctest::Approx(8.7).epsilon(0.02));
}

TEST_CASE("invalid parameters rejected") {
  Rng rng(1);
  CHECK_THROWS_AS(sample_pathloss({61.4, 20.0, 0.0, 0.0}, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_pathloss({61.4, 20.0, 10.0, -1.0}, rng), std::invalid_argument);
}

TEST_CASE("Ricean fractions sum to one") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const RiceanMix mix = RiceanMix::from_linear(rng.uniform(0.0, 50.0));
    CHECK(mix.los_fraction() + mix.nlos_fraction() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("zero K-factor is pure scatter") {
  const RiceanMix mix = RiceanMix::from_linear(0.0);
  CHECK(mix.los_fraction() == 0.0);
  CHECK(mix.nlos_fraction() == 1.0);
}

TEST_CASE("infinite K-factor is pure line of sight") {
  const RiceanMix mix = RiceanMix::pure_los();
  CHECK(mix.los_fraction() == 1.0);
  CHECK(mix.nlos_fraction() == 0.0);
  CHECK(mix.is_pure_los());
}

TEST_CASE("dB form converts before splitting") {
  const RiceanMix mix = RiceanMix::from_db(5.0);
  const double eta = db_to_linear(5.0);
  CHECK(mix.los_fraction() == doctest::Approx(eta / (1.0 + eta)).epsilon(1e-14));
  const RiceanMix blocked = RiceanMix::from_db(-std::numeric_limits<double>::infinity());
  CHECK(blocked.los_fraction() == 0.0);
}

TEST_CASE("negative K-factor rejected") {
  CHECK_THROWS_AS(RiceanMix::from_linear(-0.5), std::invalid_argument);
}
