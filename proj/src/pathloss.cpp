#include "irsmimo/pathloss.hpp"

#include <limits>
#include <stdexcept>

namespace irsmimo {

void PathLossParams::validate() const {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("path loss: distance must be positive");
  }
  if (shadow_std_db < 0.0) {
    throw std::invalid_argument("path loss: shadowing std must be nonnegative");
  }
}

PathLossSample sample_pathloss(const PathLossParams& params, Rng& rng) {
  params.validate();
  const double shadowing = params.shadow_std_db * rng.normal();
  PathLossSample sample;
  sample.attenuation_db = median_pathloss_db(params) + shadowing;
  sample.attenuation_linear = db_to_linear(sample.attenuation_db);
  return sample;
}

double median_pathloss_db(const PathLossParams& params) {
  return params.intercept_db + params.exponent_db * std::log10(params.distance_m);
}

RiceanMix RiceanMix::from_linear(double k_factor) {
  if (!(k_factor >= 0.0)) {
    throw std::invalid_argument("Ricean K-factor must be nonnegative");
  }
  RiceanMix mix;
  mix.k_factor_ = k_factor;
  if (std::isinf(k_factor)) {
    mix.los_fraction_ = 1.0;
    mix.nlos_fraction_ = 0.0;
  } else {
    mix.los_fraction_ = k_factor / (1.0 + k_factor);
    mix.nlos_fraction_ = 1.0 / (1.0 + k_factor);
  }
  return mix;
}

RiceanMix RiceanMix::from_db(double k_factor_db) {
  if (std::isinf(k_factor_db)) {
    return k_factor_db > 0.0 ? pure_los() : from_linear(0.0);
  }
  return from_linear(db_to_linear(k_factor_db));
}

RiceanMix RiceanMix::pure_los() {
  return from_linear(std::numeric_limits<double>::infinity());
}

}  // namespace irsmimo
