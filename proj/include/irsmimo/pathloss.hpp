#pragma once

#include "irsmimo/rng.hpp"

namespace irsmimo {

// Distance-dependent power attenuation in dB: a + b*log10(d) + chi, with
// shadowing chi ~ N(0, sigma^2). Larger values mean more loss; channel
// amplitudes scale by 1/sqrt of the linear value.
struct PathLossParams {
  double intercept_db = 0.0;   // a
  double exponent_db = 0.0;    // b, dB per decade of distance
  double distance_m = 1.0;     // d
  double shadow_std_db = 0.0;  // sigma

  void validate() const;  // d > 0, sigma >= 0
};

struct PathLossSample {
  double attenuation_db = 0.0;
  double attenuation_linear = 1.0;
};

// Always consumes one normal draw, so the stream layout does not depend on
// sigma; sigma = 0 is deterministic.
PathLossSample sample_pathloss(const PathLossParams& params, Rng& rng);

// Path loss with the shadowing term at its median (chi = 0).
double median_pathloss_db(const PathLossParams& params);

// How the shadowing term shifts the mean attenuation, in dB.
enum class ShadowingMeanMode {
  Paper,           // (ln 10 / 20) * 10^(sigma/5)
  LognormalExact,  // (ln 10 / 20) * sigma^2, the dB value of E[10^(chi/10)]
};

// Power split between the line-of-sight and scattered parts of a Ricean
// channel. los_fraction + nlos_fraction == 1; the K-factor may be +infinity
// (pure LOS, no scattered component).
class RiceanMix {
 public:
  RiceanMix() = default;
  static RiceanMix from_linear(double k_factor);
  static RiceanMix from_db(double k_factor_db);
  static RiceanMix pure_los();

  double k_factor() const { return k_factor_; }
  double los_fraction() const { return los_fraction_; }    // eta / (1 + eta)
  double nlos_fraction() const { return nlos_fraction_; }  // 1 / (1 + eta)
  bool is_pure_los() const { return nlos_fraction_ == 0.0; }

 private:
  double k_factor_ = 0.0;
  double los_fraction_ = 0.0;
  double nlos_fraction_ = 1.0;
};

}  // namespace irsmimo
