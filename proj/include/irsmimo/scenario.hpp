#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "irsmimo/pathloss.hpp"

namespace irsmimo {

enum class PhasePolicy { OptimalLinear, Zero, Random };
enum class PowerPolicy { Waterfilling, Equal };

// Transmitter-surface and surface-receiver distances for a surface placed on
// a line parallel to the transmitter-receiver axis at vertical offset d_v,
// a horizontal distance d_1 from the transmitter. Throws when d_1 > d_tr.
std::pair<double, double> derive_geometry(double d_tr, double d_v, double d_1);

// Full description of one simulated scenario: array sizes, fading model,
// geometry, power levels, policies, and the Monte Carlo controls.
struct ScenarioConfig {
  int tx_count = 64;        // n_t
  int rx_count = 36;        // n_r
  int elements = 100;       // n, reflecting elements per subsurface
  int subsurfaces = 3;      // k (may be 0: no surface)
  int direct_paths = 3;     // l, including the LOS path
  int tx_surface_paths = 3;  // l1
  int surface_rx_paths = 3;  // l2

  double direct_k_db = -5.0;     // eta; -inf means pure NLOS
  double tx_surface_k_db = 5.0;  // eta1; +inf means pure LOS
  double surface_rx_k_db = 5.0;  // eta2

  double distance_tx_rx = 51.0;  // d_tr, meters
  double vertical_offset = 2.0;  // d_v
  double surface_offset = 2.0;   // d_1, horizontal distance transmitter -> surface

  double direct_intercept = 72.0;  // a0
  double direct_exponent = 29.2;   // b0
  double direct_shadow_std = 8.7;  // sigma0
  double leg1_intercept = 61.4;    // a1
  double leg1_exponent = 20.0;     // b1
  double leg1_shadow_std = 5.8;    // sigma1
  double leg2_intercept = 61.4;    // a2
  double leg2_exponent = 20.0;     // b2
  double leg2_shadow_std = 5.8;    // sigma2

  double power_dbm = 30.0;
  double noise_dbm = -85.0;

  bool include_direct = true;
  double reflection_amplitude = 1.0;  // beta
  double spacing = 0.5;               // element spacing over wavelength

  PhasePolicy phase_policy = PhasePolicy::OptimalLinear;
  PowerPolicy power_policy = PowerPolicy::Waterfilling;
  ShadowingMeanMode shadow_mean_mode = ShadowingMeanMode::LognormalExact;

  int trials = 500;
  std::uint64_t seed = 1;

  double power_watts() const { return dbm_to_watts(power_dbm); }
  double noise_watts() const { return dbm_to_watts(noise_dbm); }
  std::pair<double, double> leg_distances() const {
    return derive_geometry(distance_tx_rx, vertical_offset, surface_offset);
  }
  PathLossParams direct_pathloss() const;
  PathLossParams leg1_pathloss() const;
  PathLossParams leg2_pathloss() const;
  RiceanMix direct_mix() const { return RiceanMix::from_db(direct_k_db); }
  RiceanMix tx_surface_mix() const { return RiceanMix::from_db(tx_surface_k_db); }
  RiceanMix surface_rx_mix() const { return RiceanMix::from_db(surface_rx_k_db); }

  void validate() const;  // throws ConfigError listing every violation
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

// Parses the key = value scenario format. Unit suffixes dB, dBm, and m are
// accepted on the fields they apply to; '#' starts a comment. Unknown keys,
// malformed lines, and missing required fields are reported together with
// line numbers in a single ConfigError.
ScenarioConfig parse_config(const std::string& text, const std::string& origin = "<config>");
ScenarioConfig load_config(const std::filesystem::path& path);

// Canonical text form; parse_config(serialize_config(c)) reproduces c exactly.
std::string serialize_config(const ScenarioConfig& config);
void save_config(const ScenarioConfig& config, const std::filesystem::path& path);

// Applies one key = value override (same keys as the config file).
void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value);

// FNV-1a digest of the canonical text form.
std::uint64_t config_digest(const ScenarioConfig& config);

}  // namespace irsmimo
