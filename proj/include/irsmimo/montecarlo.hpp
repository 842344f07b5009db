#pragma once

#include <functional>
#include <string>
#include <vector>

#include "irsmimo/scenario.hpp"
#include "irsmimo/transceiver.hpp"

namespace irsmimo {

enum class Execution { Serial, OpenMP };

// Runs `body` once per trial with that trial's private rng stream. Every
// trial writes only its own slot, so results are identical for the serial
// reference and for any OpenMP thread count. `threads` <= 0 uses the OpenMP
// default. Exceptions thrown by a trial abort the whole run.
void for_each_trial(std::size_t trials, std::uint64_t master_seed, Execution execution,
                    int threads, const std::function<void(std::size_t, Rng&)>& body);

// Sum with pairwise splitting; the result does not depend on how trials were
// scheduled and is accurate for long accumulations.
double pairwise_sum(std::span<const double> values);

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;
  double stderror = 0.0;
};

MetricSummary summarize(std::span<const double> values);

struct TrialRecord {
  double exact_rate = 0.0;        // SVD transceiver under the configured power policy
  double asymptotic_rate = 0.0;   // virtual-path rate under the same policy
  double epa_formula_rate = 0.0;  // closed-form equal-power rate (NaN when K = 0)
  double power_watts = 0.0;       // transmit power used by the trial
};

struct RateReport {
  std::vector<TrialRecord> trials;
  MetricSummary exact;
  MetricSummary asymptotic;
  MetricSummary epa_formula;
  std::uint64_t seed = 0;
  std::uint64_t config_digest = 0;
  std::string version;

  static RateReport from_trials(std::vector<TrialRecord> trials, const ScenarioConfig& config);
};

// Builds the per-subsurface phase profiles for the configured policy; random
// phases are drawn from `rng` after the channel draws.
std::vector<PhaseProfile> make_phase_profiles(const ScenarioConfig& config,
                                              const ChannelRealization& realization, Rng& rng);

// One full trial: realization, profiles, aggregate channel, SVD rate under
// the configured power policy, virtual-path rate, and the equal-power
// closed-form rate.
TrialRecord run_trial(const ScenarioConfig& config, std::uint64_t trial_index);

RateReport run_monte_carlo(const ScenarioConfig& config,
                           Execution execution = Execution::OpenMP, int threads = 0);

}  // namespace irsmimo
