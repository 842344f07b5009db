#include "irsmimo/scenario.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace irsmimo {

std::pair<double, double> derive_geometry(double d_tr, double d_v, double d_1) {
  if (d_tr < 0.0 || d_v < 0.0 || d_1 < 0.0) {
    throw std::invalid_argument("derive_geometry: distances must be nonnegative");
  }
  if (d_1 > d_tr) {
    throw std::invalid_argument("derive_geometry: surface offset exceeds the link distance");
  }
  return {std::hypot(d_1, d_v), std::hypot(d_tr - d_1, d_v)};
}

PathLossParams ScenarioConfig::direct_pathloss() const {
  return {direct_intercept, direct_exponent, distance_tx_rx, direct_shadow_std};
}

PathLossParams ScenarioConfig::leg1_pathloss() const {
  return {leg1_intercept, leg1_exponent, leg_distances().first, leg1_shadow_std};
}

PathLossParams ScenarioConfig::leg2_pathloss() const {
  return {leg2_intercept, leg2_exponent, leg_distances().second, leg2_shadow_std};
}

void ScenarioConfig::validate() const {
  std::vector<std::string> problems;
  auto require = [&](bool ok, const std::string& message) {
    if (!ok) problems.push_back(message);
  };
  require(tx_count >= 1, "n_t must be at least 1");
  require(rx_count >= 1, "n_r must be at least 1");
  require(elements >= 1, "n must be at least 1");
  require(subsurfaces >= 0, "k must be nonnegative");
  require(direct_paths >= 1, "l must be at least 1");
  require(tx_surface_paths >= 1, "l1 must be at least 1");
  require(surface_rx_paths >= 1, "l2 must be at least 1");
  require(trials >= 1, "trials must be at least 1");
  require(include_direct || subsurfaces > 0, "need a direct link, a surface, or both");
  require(direct_shadow_std >= 0.0 && leg1_shadow_std >= 0.0 && leg2_shadow_std >= 0.0,
          "shadowing stds must be nonnegative");
  require(reflection_amplitude > 0.0 && reflection_amplitude <= 1.0,
          "beta must lie in (0, 1]");
  require(spacing > 0.0, "spacing must be positive");
  require(vertical_offset >= 0.0, "d_v must be nonnegative");
  require(surface_offset >= 0.0, "d_1 must be nonnegative");
  require(surface_offset <= distance_tx_rx, "d_1 must not exceed d_tr");
  if (include_direct) require(distance_tx_rx > 0.0, "d_tr must be positive");
  if (subsurfaces > 0 && surface_offset <= distance_tx_rx && vertical_offset >= 0.0 &&
      surface_offset >= 0.0) {
    const auto [d1, d2] = derive_geometry(distance_tx_rx, vertical_offset, surface_offset);
    require(d1 > 0.0, "transmitter-surface distance is zero");
    require(d2 > 0.0, "surface-receiver distance is zero");
  }
  if (!problems.empty()) {
    std::string message = "invalid scenario:";
    for (const std::string& p : problems) {
      if (p.empty()) continue;
      message += "\n  - " + p;
    }
    throw ConfigError(message);
  }
}

namespace {

std::string trim(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

// Parses "<number> [suffix]" where the optional suffix must match `unit`
// ("" means no suffix allowed). "inf"/"-inf" are valid numbers.
double parse_number(const std::string& raw, const std::string& unit) {
  const std::string value = trim(raw);
  if (value.empty()) throw std::invalid_argument("empty value");
  const char* begin = value.c_str();
  char* end = nullptr;
  const double parsed = std::strtod(begin, &end);
  if (end == begin) throw std::invalid_argument("not a number: '" + value + "'");
  const std::string suffix = trim(value.substr(end - begin));
  if (!suffix.empty() && suffix != unit) {
    throw std::invalid_argument("unexpected unit '" + suffix + "'" +
                                (unit.empty() ? "" : " (expected '" + unit + "')"));
  }
  return parsed;
}

int parse_int(const std::string& raw) {
  const double value = parse_number(raw, "");
  const int as_int = static_cast<int>(value);
  if (static_cast<double>(as_int) != value) {
    throw std::invalid_argument("expected an integer, got '" + trim(raw) + "'");
  }
  return as_int;
}

std::uint64_t parse_seed(const std::string& raw) {
  const std::string value = trim(raw);
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    throw std::invalid_argument("expected a nonnegative integer seed");
  }
  return parsed;
}

bool parse_bool(const std::string& raw) {
  const std::string value = trim(raw);
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("expected true/false, got '" + value + "'");
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

const char* policy_name(PhasePolicy policy) {
  switch (policy) {
    case PhasePolicy::OptimalLinear: return "optimal-linear";
    case PhasePolicy::Zero: return "zero";
    case PhasePolicy::Random: return "random";
  }
  return "optimal-linear";
}

const char* policy_name(PowerPolicy policy) {
  return policy == PowerPolicy::Waterfilling ? "opa" : "epa";
}

const char* mode_name(ShadowingMeanMode mode) {
  return mode == ShadowingMeanMode::Paper ? "paper" : "lognormal-exact";
}

PhasePolicy parse_phase_policy(const std::string& raw) {
  const std::string value = trim(raw);
  if (value == "optimal-linear") return PhasePolicy::OptimalLinear;
  if (value == "zero") return PhasePolicy::Zero;
  if (value == "random") return PhasePolicy::Random;
  throw std::invalid_argument("unknown phase policy '" + value +
                              "' (expected optimal-linear, zero, or random)");
}

PowerPolicy parse_power_policy(const std::string& raw) {
  const std::string value = trim(raw);
  if (value == "opa") return PowerPolicy::Waterfilling;
  if (value == "epa") return PowerPolicy::Equal;
  throw std::invalid_argument("unknown power policy '" + value + "' (expected opa or epa)");
}

ShadowingMeanMode parse_mean_mode(const std::string& raw) {
  const std::string value = trim(raw);
  if (value == "lognormal-exact") return ShadowingMeanMode::LognormalExact;
  if (value == "paper") return ShadowingMeanMode::Paper;
  throw std::invalid_argument("unknown ci mode '" + value +
                              "' (expected lognormal-exact or paper)");
}

}  // namespace

void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value) {
  if (key == "n_t") config.tx_count = parse_int(value);
  else if (key == "n_r") config.rx_count = parse_int(value);
  else if (key == "n") config.elements = parse_int(value);
  else if (key == "k") config.subsurfaces = parse_int(value);
  else if (key == "l") config.direct_paths = parse_int(value);
  else if (key == "l1") config.tx_surface_paths = parse_int(value);
  else if (key == "l2") config.surface_rx_paths = parse_int(value);
  else if (key == "eta") config.direct_k_db = parse_number(value, "dB");
  else if (key == "eta1") config.tx_surface_k_db = parse_number(value, "dB");
  else if (key == "eta2") config.surface_rx_k_db = parse_number(value, "dB");
  else if (key == "d_tr") config.distance_tx_rx = parse_number(value, "m");
  else if (key == "d_v") config.vertical_offset = parse_number(value, "m");
  else if (key == "d_1") config.surface_offset = parse_number(value, "m");
  else if (key == "a0") config.direct_intercept = parse_number(value, "dB");
  else if (key == "b0") config.direct_exponent = parse_number(value, "");
  else if (key == "sigma0") config.direct_shadow_std = parse_number(value, "dB");
  else if (key == "a1") config.leg1_intercept = parse_number(value, "dB");
  else if (key == "b1") config.leg1_exponent = parse_number(value, "");
  else if (key == "sigma1") config.leg1_shadow_std = parse_number(value, "dB");
  else if (key == "a2") config.leg2_intercept = parse_number(value, "dB");
  else if (key == "b2") config.leg2_exponent = parse_number(value, "");
  else if (key == "sigma2") config.leg2_shadow_std = parse_number(value, "dB");
  else if (key == "power") config.power_dbm = parse_number(value, "dBm");
  else if (key == "noise") config.noise_dbm = parse_number(value, "dBm");
  else if (key == "include_direct") config.include_direct = parse_bool(value);
  else if (key == "beta") config.reflection_amplitude = parse_number(value, "");
  else if (key == "spacing") config.spacing = parse_number(value, "");
  else if (key == "phase_policy") config.phase_policy = parse_phase_policy(value);
  else if (key == "power_policy") config.power_policy = parse_power_policy(value);
  else if (key == "ci_mode") config.shadow_mean_mode = parse_mean_mode(value);
  else if (key == "trials") config.trials = parse_int(value);
  else if (key == "seed") config.seed = parse_seed(value);
  else throw std::invalid_argument("unknown key '" + key + "'");
}

ScenarioConfig parse_config(const std::string& text, const std::string& origin) {
  ScenarioConfig config;
  std::vector<std::string> problems;
  std::set<std::string> seen;

  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const std::size_t equals = content.find('=');
    auto complain = [&](const std::string& what) {
      problems.push_back(origin + ":" + std::to_string(line_number) + ": " + what);
    };
    if (equals == std::string::npos) {
      complain("expected 'key = value'");
      continue;
    }
    const std::string key = trim(content.substr(0, equals));
    const std::string value = content.substr(equals + 1);
    if (key.empty()) {
      complain("missing key");
      continue;
    }
    if (!seen.insert(key).second) {
      complain("duplicate key '" + key + "'");
      continue;
    }
    try {
      apply_setting(config, key, value);
    } catch (const std::exception& error) {
      complain(std::string(error.what()) + " in field '" + key + "'");
    }
  }

  for (const char* required : {"n_t", "n_r", "n", "k", "trials", "seed"}) {
    if (!seen.count(required)) {
      problems.push_back(origin + ": missing required field '" + std::string(required) + "'");
    }
  }
  if (!problems.empty()) {
    std::string message = "config errors:";
    for (const std::string& p : problems) message += "\n  - " + p;
    throw ConfigError(message);
  }
  config.validate();
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), path.string());
}

std::string serialize_config(const ScenarioConfig& config) {
  std::ostringstream out;
  out << "n_t = " << config.tx_count << "\n";
  out << "n_r = " << config.rx_count << "\n";
  out << "n = " << config.elements << "\n";
  out << "k = " << config.subsurfaces << "\n";
  out << "l = " << config.direct_paths << "\n";
  out << "l1 = " << config.tx_surface_paths << "\n";
  out << "l2 = " << config.surface_rx_paths << "\n";
  out << "eta = " << format_number(config.direct_k_db) << " dB\n";
  out << "eta1 = " << format_number(config.tx_surface_k_db) << " dB\n";
  out << "eta2 = " << format_number(config.surface_rx_k_db) << " dB\n";
  out << "d_tr = " << format_number(config.distance_tx_rx) << " m\n";
  out << "d_v = " << format_number(config.vertical_offset) << " m\n";
  out << "d_1 = " << format_number(config.surface_offset) << " m\n";
  out << "a0 = " << format_number(config.direct_intercept) << " dB\n";
  out << "b0 = " << format_number(config.direct_exponent) << "\n";
  out << "sigma0 = " << format_number(config.direct_shadow_std) << " dB\n";
  out << "a1 = " << format_number(config.leg1_intercept) << " dB\n";
  out << "b1 = " << format_number(config.leg1_exponent) << "\n";
  out << "sigma1 = " << format_number(config.leg1_shadow_std) << " dB\n";
  out << "a2 = " << format_number(config.leg2_intercept) << " dB\n";
  out << "b2 = " << format_number(config.leg2_exponent) << "\n";
  out << "sigma2 = " << format_number(config.leg2_shadow_std) << " dB\n";
  out << "power = " << format_number(config.power_dbm) << " dBm\n";
  out << "noise = " << format_number(config.noise_dbm) << " dBm\n";
  out << "include_direct = " << (config.include_direct ? "true" : "false") << "\n";
  out << "beta = " << format_number(config.reflection_amplitude) << "\n";
  out << "spacing = " << format_number(config.spacing) << "\n";
  out << "phase_policy = " << policy_name(config.phase_policy) << "\n";
  out << "power_policy = " << policy_name(config.power_policy) << "\n";
  out << "ci_mode = " << mode_name(config.shadow_mean_mode) << "\n";
  out << "trials = " << config.trials << "\n";
  out << "seed = " << config.seed << "\n";
  return out.str();
}

void save_config(const ScenarioConfig& config, const std::filesystem::path& path) {
  std::ofstream file(path);
  if (!file) throw ConfigError("cannot write config file: " + path.string());
  file << serialize_config(config);
}

std::uint64_t config_digest(const ScenarioConfig& config) {
  const std::string text = serialize_config(config);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char byte : text) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace irsmimo
