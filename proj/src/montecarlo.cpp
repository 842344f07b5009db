#include "irsmimo/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <limits>

#include <omp.h>

#include "irsmimo/version.hpp"

namespace irsmimo {

void for_each_trial(std::size_t trials, std::uint64_t master_seed, Execution execution,
                    int threads, const std::function<void(std::size_t, Rng&)>& body) {
  if (execution == Execution::Serial) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::for_trial(master_seed, trial);
      body(trial, rng);
    }
    return;
  }

  const int worker_count = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(worker_count)
  for (long long trial = 0; trial < static_cast<long long>(trials); ++trial) {
    try {
      Rng rng = Rng::for_trial(master_seed, static_cast<std::uint64_t>(trial));
      body(static_cast<std::size_t>(trial), rng);
    } catch (...) {
#pragma omp critical(irsmimo_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double sum = 0.0;
    for (double value : values) sum += value;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MetricSummary summarize(std::span<const double> values) {
  MetricSummary summary;
  if (values.empty()) return summary;
  const double n = static_cast<double>(values.size());
  summary.mean = pairwise_sum(values) / n;
  if (values.size() > 1) {
    std::vector<double> squared(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double deviation = values[i] - summary.mean;
      squared[i] = deviation * deviation;
    }
    summary.stddev = std::sqrt(pairwise_sum(squared) / (n - 1.0));
    summary.stderror = summary.stddev / std::sqrt(n);
  }
  return summary;
}

std::vector<PhaseProfile> make_phase_profiles(const ScenarioConfig& config,
                                              const ChannelRealization& realization, Rng& rng) {
  std::vector<PhaseProfile> profiles;
  profiles.reserve(realization.subsurface_count());
  for (int k = 0; k < realization.subsurface_count(); ++k) {
    switch (config.phase_policy) {
      case PhasePolicy::OptimalLinear: {
        const PathSelection selection = select_strongest_path(realization, k);
        profiles.push_back(
            linear_profile(selection.slope, config.elements, config.reflection_amplitude));
        break;
      }
      case PhasePolicy::Zero:
        profiles.push_back(linear_profile(0.0, config.elements, config.reflection_amplitude));
        break;
      case PhasePolicy::Random: {
        std::vector<double> phases(config.elements);
        for (double& phase : phases) phase = rng.uniform(0.0, kTwoPi);
        profiles.push_back(make_profile(std::move(phases), config.reflection_amplitude));
        break;
      }
    }
  }
  return profiles;
}

TrialRecord run_trial(const ScenarioConfig& config, std::uint64_t trial_index) {
  Rng rng = Rng::for_trial(config.seed, trial_index);
  const ChannelRealization realization = sample_link_realization(config, rng);
  const std::vector<PhaseProfile> profiles = make_phase_profiles(config, realization, rng);
  const ComplexMatrix overall = aggregate_channel(realization, profiles);
  const PathDecomposition decomposition = path_decomposition(realization, profiles);

  const double power = config.power_watts();
  const double noise = config.noise_watts();

  TrialRecord record;
  record.power_watts = power;

  const std::vector<double> exact_gains = usable_power_gains(overall);
  const std::vector<double> path_gains = decomposition.power_gains();
  if (config.power_policy == PowerPolicy::Waterfilling) {
    record.exact_rate = sum_rate(exact_gains, waterfilling(exact_gains, power, noise));
    record.asymptotic_rate = sum_rate(path_gains, waterfilling(path_gains, power, noise));
  } else {
    record.exact_rate = sum_rate(
        exact_gains, equal_allocation(static_cast<int>(exact_gains.size()), power, noise));
    record.asymptotic_rate = sum_rate(
        path_gains, equal_allocation(static_cast<int>(path_gains.size()), power, noise));
  }

  if (realization.subsurface_count() > 0) {
    std::vector<double> products;
    products.reserve(realization.subsurface_count());
    for (int k = 0; k < realization.subsurface_count(); ++k) {
      products.push_back(realization.tx_to_surface[k].attenuation_linear *
                         realization.surface_to_rx[k].attenuation_linear);
    }
    record.epa_formula_rate =
        epa_rate(power, products, config.tx_count, config.rx_count, config.elements, noise);
  } else {
    record.epa_formula_rate = std::numeric_limits<double>::quiet_NaN();
  }
  return record;
}

RateReport RateReport::from_trials(std::vector<TrialRecord> trials,
                                   const ScenarioConfig& config) {
  RateReport report;
  report.trials = std::move(trials);
  std::vector<double> exact, asymptotic, epa;
  exact.reserve(report.trials.size());
  asymptotic.reserve(report.trials.size());
  epa.reserve(report.trials.size());
  for (const TrialRecord& record : report.trials) {
    exact.push_back(record.exact_rate);
    asymptotic.push_back(record.asymptotic_rate);
    if (!std::isnan(record.epa_formula_rate)) epa.push_back(record.epa_formula_rate);
  }
  report.exact = summarize(exact);
  report.asymptotic = summarize(asymptotic);
  report.epa_formula = summarize(epa);
  report.seed = config.seed;
  report.config_digest = irsmimo::config_digest(config);
  report.version = std::string(kVersion);
  return report;
}

RateReport run_monte_carlo(const ScenarioConfig& config, Execution execution, int threads) {
  config.validate();
  std::vector<TrialRecord> trials(static_cast<std::size_t>(config.trials));
  for_each_trial(trials.size(), config.seed, execution, threads,
                 [&](std::size_t trial, Rng&) { trials[trial] = run_trial(config, trial); });
  return RateReport::from_trials(std::move(trials), config);
}

}  // namespace irsmimo
