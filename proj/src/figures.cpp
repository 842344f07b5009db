#include "irsmimo/figures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

namespace irsmimo {

namespace {

constexpr int kFig4Trials = 50;
constexpr int kFig8Trials = 200;
constexpr int kPowerDraws = 10000;

std::vector<int> fig45_tx_grid() { return {32, 48, 64, 80, 96, 112}; }
std::vector<int> fig56_tx_grid() { return {8, 16, 24, 32, 40, 48, 56, 64}; }

// Receiver size coupled linearly to the transmitter sweep; the endpoints are
// (32, 32)->(112, 82) for the singular-value sweep and (8, 8)->(64, 36) for
// the rate sweeps.
int fig4_rx_for_tx(int tx) { return static_cast<int>(std::lround(32.0 + (tx - 32) * 50.0 / 80.0)); }
int fig56_rx_for_tx(int tx) { return static_cast<int>(std::lround(8.0 + (tx - 8) * 28.0 / 56.0)); }

FigureRow make_row(double sweep, std::string curve, const MetricSummary& summary,
                   std::size_t trials) {
  return {sweep, std::move(curve), summary.mean, summary.stderror, trials};
}

FigureDataset run_fig2(const ScenarioConfig& base, Execution execution, int threads) {
  FigureDataset dataset{"fig2", "n", {}};
  const std::size_t draws = static_cast<std::size_t>(base.trials);
  for (int elements : {8, 16, 32, 64, 128, 256, 512, 1000}) {
    std::vector<double> optimal(draws), zero(draws), random_phase(draws), random_slope(draws);
    for_each_trial(draws, base.seed, execution, threads, [&](std::size_t t, Rng& rng) {
      const double incident = rng.azimuth();
      const double departure = rng.azimuth();
      const PhaseProfile aligned = optimal_phases(incident, departure, elements);
      optimal[t] = std::norm(coupling(departure, aligned, incident, base.spacing));
      const PhaseProfile mirror = linear_profile(0.0, elements);
      zero[t] = std::norm(coupling(departure, mirror, incident, base.spacing));
      std::vector<double> phases(elements);
      for (double& phase : phases) phase = rng.uniform(0.0, kTwoPi);
      random_phase[t] =
          std::norm(coupling(departure, make_profile(std::move(phases)), incident, base.spacing));
      const PhaseProfile slope_only = linear_profile(rng.uniform(-2.0, 2.0), elements);
      random_slope[t] = std::norm(coupling(departure, slope_only, incident, base.spacing));
    });
    dataset.rows.push_back(make_row(elements, "optimal", summarize(optimal), draws));
    dataset.rows.push_back(make_row(elements, "zero", summarize(zero), draws));
    dataset.rows.push_back(make_row(elements, "random-phase", summarize(random_phase), draws));
    dataset.rows.push_back(make_row(elements, "random-slope", summarize(random_slope), draws));
  }
  return dataset;
}

FigureDataset run_fig4(const ScenarioConfig& base, Execution execution, int threads) {
  FigureDataset dataset{"fig4", "n_t", {}};
  for (int tx : fig45_tx_grid()) {
    ScenarioConfig config = base;
    config.tx_count = tx;
    config.rx_count = fig4_rx_for_tx(tx);
    config.validate();
    const std::size_t trials = static_cast<std::size_t>(config.trials);
    std::vector<double> first(trials), sixth(trials), seventh(trials);
    for_each_trial(trials, config.seed, execution, threads, [&](std::size_t t, Rng&) {
      Rng rng = Rng::for_trial(config.seed, t);
      const ChannelRealization realization = sample_link_realization(config, rng);
      const std::vector<PhaseProfile> profiles = make_phase_profiles(config, realization, rng);
      Eigen::BDCSVD<ComplexMatrix> svd(aggregate_channel(realization, profiles));
      const RealVector& values = svd.singularValues();
      first[t] = values.size() > 0 ? values[0] : 0.0;
      sixth[t] = values.size() > 5 ? values[5] : 0.0;
      seventh[t] = values.size() > 6 ? values[6] : 0.0;
    });
    dataset.rows.push_back(make_row(tx, "sigma1", summarize(first), trials));
    dataset.rows.push_back(make_row(tx, "sigma6", summarize(sixth), trials));
    dataset.rows.push_back(make_row(tx, "sigma7", summarize(seventh), trials));
  }
  return dataset;
}

FigureDataset run_fig5(const ScenarioConfig& base, Execution execution, int threads) {
  FigureDataset dataset{"fig5", "n_t", {}};
  for (int tx : fig56_tx_grid()) {
    for (double offset : {2.0, 25.0, 45.0}) {
      ScenarioConfig config = base;
      config.tx_count = tx;
      config.rx_count = fig56_rx_for_tx(tx);
      config.surface_offset = offset;
      const RateReport report = run_monte_carlo(config, execution, threads);
      const std::string tag = "-d" + std::to_string(static_cast<int>(offset));
      dataset.rows.push_back(make_row(tx, "svd" + tag, report.exact, report.trials.size()));
      dataset.rows.push_back(
          make_row(tx, "asymptotic" + tag, report.asymptotic, report.trials.size()));
    }
  }
  return dataset;
}

FigureDataset run_fig6(const ScenarioConfig& base, Execution execution, int threads) {
  FigureDataset dataset{"fig6", "n_t", {}};
  for (int tx : fig56_tx_grid()) {
    for (int elements : {10, 100, 1000}) {
      ScenarioConfig config = base;
      config.tx_count = tx;
      config.rx_count = fig56_rx_for_tx(tx);
      config.elements = elements;
      const RateReport report = run_monte_carlo(config, execution, threads);
      dataset.rows.push_back(make_row(tx, "n" + std::to_string(elements), report.exact,
                                      report.trials.size()));
    }
    ScenarioConfig config = base;
    config.tx_count = tx;
    config.rx_count = fig56_rx_for_tx(tx);
    config.subsurfaces = 0;
    const RateReport report = run_monte_carlo(config, execution, threads);
    dataset.rows.push_back(make_row(tx, "no-irs", report.exact, report.trials.size()));
  }
  return dataset;
}

FigureDataset run_fig7(const ScenarioConfig& base, Execution execution, int threads) {
  FigureDataset dataset{"fig7", "n", {}};
  for (int elements = 50; elements <= 500; elements += 50) {
    for (int subsurfaces : {1, 3, 6}) {
      for (PhasePolicy policy : {PhasePolicy::OptimalLinear, PhasePolicy::Zero}) {
        ScenarioConfig config = base;
        config.elements = elements;
        config.subsurfaces = subsurfaces;
        config.phase_policy = policy;
        const RateReport report = run_monte_carlo(config, execution, threads);
        const std::string curve =
            std::string(policy == PhasePolicy::OptimalLinear ? "optimal" : "zero") + "-k" +
            std::to_string(subsurfaces);
        dataset.rows.push_back(make_row(elements, curve, report.exact, report.trials.size()));
      }
    }
  }
  return dataset;
}

FigureDataset run_fig8(const ScenarioConfig& base, Execution execution, int threads) {
  FigureDataset dataset{"fig8", "k", {}};
  for (int subsurfaces = 1; subsurfaces <= 10; ++subsurfaces) {
    for (int elements : {10, 100, 200, 1000}) {
      for (PowerPolicy policy : {PowerPolicy::Waterfilling, PowerPolicy::Equal}) {
        ScenarioConfig config = base;
        config.subsurfaces = subsurfaces;
        config.elements = elements;
        config.power_policy = policy;
        const RateReport report = run_monte_carlo(config, execution, threads);
        const std::string curve =
            std::string(policy == PowerPolicy::Waterfilling ? "opa" : "epa") + "-n" +
            std::to_string(elements);
        dataset.rows.push_back(
            make_row(subsurfaces, curve, report.exact, report.trials.size()));
      }
    }
  }
  return dataset;
}

FigureDataset run_fig9(const ScenarioConfig& base, Execution, int) {
  FigureDataset dataset{"fig9", "n", {}};
  const std::size_t draws = static_cast<std::size_t>(base.trials);
  const std::vector<std::vector<double>> products = sample_gain_products(
      base.leg1_pathloss(), base.leg2_pathloss(), base.subsurfaces, draws, base.seed);
  const double gbar = mean_gain_product(base.leg1_pathloss(), base.leg2_pathloss(),
                                        base.shadow_mean_mode);
  const double noise = base.noise_watts();
  for (int elements = 10; elements <= 100; elements += 10) {
    for (double target_rate : {15.0, 30.0, 45.0}) {
      std::vector<double> powers(draws);
      for (std::size_t t = 0; t < draws; ++t) {
        powers[t] = instantaneous_power_for_rate(target_rate, products[t], base.tx_count,
                                                 base.rx_count, elements, noise);
      }
      const std::string tag = "-r" + std::to_string(static_cast<int>(target_rate));
      dataset.rows.push_back(make_row(elements, "sim" + tag, summarize(powers), draws));
      const double analytic = min_power_epa(target_rate, base.subsurfaces, elements,
                                            base.tx_count, base.rx_count, noise, gbar);
      dataset.rows.push_back({static_cast<double>(elements), "analytic" + tag, analytic, 0.0, 0});
    }
  }
  return dataset;
}

}  // namespace

std::vector<std::string> figure_names() {
  return {"fig2", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"};
}

ScenarioConfig figure_base_config(const std::string& name) {
  ScenarioConfig base;  // baseline measurement constants live in the defaults
  if (name == "fig2") {
    base.trials = 200;
  } else if (name == "fig4") {
    base.direct_k_db = 5.0;
    base.elements = 300;
    base.surface_offset = 15.0;
    base.tx_count = 112;
    base.rx_count = 82;
    base.trials = kFig4Trials;
  } else if (name == "fig5") {
    // defaults: K = 3, N = 100, eta = -5 dB, eta1 = eta2 = 5 dB
  } else if (name == "fig6") {
    // defaults; N and the no-surface baseline are swept per curve
  } else if (name == "fig7") {
    base.surface_offset = 5.0;
  } else if (name == "fig8" || name == "fig9") {
    base.include_direct = false;
    base.tx_surface_k_db = std::numeric_limits<double>::infinity();
    base.surface_rx_k_db = std::numeric_limits<double>::infinity();
    base.tx_surface_paths = 1;
    base.surface_rx_paths = 1;
    base.surface_offset = 25.0;
    base.tx_count = 100;
    base.rx_count = 100;
    base.trials = name == "fig8" ? kFig8Trials : kPowerDraws;
    if (name == "fig9") base.subsurfaces = 5;
  } else {
    throw std::invalid_argument("unknown figure '" + name + "'");
  }
  return base;
}

FigureDataset figure_command(const std::string& name,
                             const std::vector<std::pair<std::string, std::string>>& overrides,
                             Execution execution, int threads) {
  ScenarioConfig base = figure_base_config(name);
  for (const auto& [key, value] : overrides) apply_setting(base, key, value);
  base.validate();

  if (name == "fig2") return run_fig2(base, execution, threads);
  if (name == "fig4") return run_fig4(base, execution, threads);
  if (name == "fig5") return run_fig5(base, execution, threads);
  if (name == "fig6") return run_fig6(base, execution, threads);
  if (name == "fig7") return run_fig7(base, execution, threads);
  if (name == "fig8") return run_fig8(base, execution, threads);
  if (name == "fig9") return run_fig9(base, execution, threads);
  throw std::invalid_argument("unknown figure '" + name + "'");
}

std::vector<std::vector<double>> sample_gain_products(const PathLossParams& leg1,
                                                      const PathLossParams& leg2,
                                                      int subsurfaces, std::size_t draws,
                                                      std::uint64_t seed) {
  leg1.validate();
  leg2.validate();
  if (subsurfaces < 1) throw std::invalid_argument("sample_gain_products: need K >= 1");
  if (draws == 0) throw std::invalid_argument("sample_gain_products: need draws >= 1");
  const double median_db = median_pathloss_db(leg1) + median_pathloss_db(leg2);
  const double sigma_db = std::hypot(leg1.shadow_std_db, leg2.shadow_std_db);

  std::vector<std::vector<double>> products(draws, std::vector<double>(subsurfaces));
  for (int k = 0; k < subsurfaces; ++k) {
    // Stratify this subsurface's stream: one draw per quantile slot, slots
    // visited in a seeded shuffle so draws stay exchangeable across k.
    Rng order_rng = Rng::for_trial(seed, 2 * static_cast<std::uint64_t>(k));
    Rng jitter_rng = Rng::for_trial(seed, 2 * static_cast<std::uint64_t>(k) + 1);
    std::vector<std::uint32_t> slots(draws);
    std::iota(slots.begin(), slots.end(), 0u);
    for (std::size_t i = draws - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(order_rng.uniform() * (i + 1));
      std::swap(slots[i], slots[std::min(j, i)]);
    }
    for (std::size_t t = 0; t < draws; ++t) {
      double u = (slots[t] + jitter_rng.uniform()) / static_cast<double>(draws);
      u = std::clamp(u, 1e-15, 1.0 - 1e-15);
      if (sigma_db == 0.0) {
        products[t][k] = db_to_linear(median_db);
      } else {
        products[t][k] = db_to_linear(median_db + sigma_db * inverse_normal_cdf(u));
      }
    }
  }
  return products;
}

}  // namespace irsmimo
