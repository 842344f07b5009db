#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsmimo/figures.hpp"
#include "irsmimo/report.hpp"
#include "irsmimo/version.hpp"

namespace {

using namespace irsmimo;

std::vector<std::pair<std::string, std::string>> split_settings(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> settings;
  for (const std::string& entry : raw) {
    const std::size_t equals = entry.find('=');
    if (equals == std::string::npos) {
      throw CLI::ValidationError("--set", "expected key=value, got '" + entry + "'");
    }
    settings.emplace_back(entry.substr(0, equals), entry.substr(equals + 1));
  }
  return settings;
}

int run_simulate(const std::string& config_path, const std::string& out_dir, int threads,
                 std::int64_t seed_override, int trials_override) {
  ScenarioConfig config = load_config(config_path);
  if (seed_override >= 0) config.seed = static_cast<std::uint64_t>(seed_override);
  if (trials_override > 0) config.trials = trials_override;
  config.validate();

  const RateReport report = run_monte_carlo(config, Execution::OpenMP, threads);
  emit_report(report, config, out_dir);

  std::printf("trials             %zu\n", report.trials.size());
  std::printf("exact rate         %.6f +- %.6f bits/s/Hz\n", report.exact.mean,
              report.exact.stderror);
  std::printf("asymptotic rate    %.6f +- %.6f bits/s/Hz\n", report.asymptotic.mean,
              report.asymptotic.stderror);
  if (config.subsurfaces > 0) {
    std::printf("epa formula rate   %.6f +- %.6f bits/s/Hz\n", report.epa_formula.mean,
                report.epa_formula.stderror);
  }
  std::printf("results written to %s\n", out_dir.c_str());
  return 0;
}

int run_figure(const std::string& name, const std::string& out_dir,
               const std::vector<std::string>& raw_settings, int threads) {
  const FigureDataset dataset = figure_command(name, split_settings(raw_settings),
                                               Execution::OpenMP, threads);
  const std::filesystem::path file = std::filesystem::path(out_dir) / (dataset.name + ".csv");
  write_figure_csv(dataset, file);
  std::printf("%zu rows written to %s\n", dataset.rows.size(), file.string().c_str());
  return 0;
}

int run_power(double rate, int subsurfaces, int elements, int tx, int rx, double noise_dbm,
              const ScenarioConfig& geometry, const std::string& ci_mode) {
  ScenarioConfig config = geometry;
  apply_setting(config, "ci_mode", ci_mode);
  const double gbar = mean_gain_product(config.leg1_pathloss(), config.leg2_pathloss(),
                                        config.shadow_mean_mode);
  const double noise = dbm_to_watts(noise_dbm);
  const double power = min_power_epa(rate, subsurfaces, elements, tx, rx, noise, gbar);
  std::printf("mean cascaded attenuation  %.6f dB\n", linear_to_db(gbar));
  std::printf("required average power     %.9g W (%.4f dBm)\n", power, watts_to_dbm(power));
  std::printf("per-stream SNR target      %.6f dB\n",
              linear_to_db(std::exp2(rate / subsurfaces) - 1.0));
  return 0;
}

int run_optimal_k(double rate, int total_elements) {
  const SubsurfaceCount result = optimal_subsurface_count(rate);
  std::printf("real-valued optimum  %.9f\n", result.real_root);
  std::printf("recommended K        %d\n", result.recommended);
  if (total_elements > 0) {
    std::printf("elements per subsurface at M = %d: %.2f\n", total_elements,
                static_cast<double>(total_elements) / result.recommended);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for a surface-assisted mmWave point-to-point MIMO link"};
  app.set_version_flag("--version", std::string(irsmimo::kVersion));
  app.require_subcommand(1);

  // simulate
  std::string config_path, out_dir = "out";
  int threads = 0;
  std::int64_t seed_override = -1;
  int trials_override = 0;
  CLI::App* simulate = app.add_subcommand("simulate", "Run a Monte Carlo scenario");
  simulate->add_option("--config", config_path, "Scenario config file")->required();
  simulate->add_option("--out", out_dir, "Output directory")->capture_default_str();
  simulate->add_option("--seed", seed_override, "Override the master seed");
  simulate->add_option("--trials", trials_override, "Override the trial count");
  simulate->add_option("--threads", threads, "Worker threads (0 = OpenMP default)");

  // figure
  std::string figure_name, figure_out = ".";
  std::vector<std::string> settings;
  int figure_threads = 0;
  CLI::App* figure = app.add_subcommand("figure", "Reproduce one of the built-in experiments");
  figure->add_option("name", figure_name, "One of: fig2 fig4 fig5 fig6 fig7 fig8 fig9")
      ->required();
  figure->add_option("--out", figure_out, "Output directory")->capture_default_str();
  figure->add_option("--set", settings, "Config override key=value (repeatable)");
  figure->add_option("--threads", figure_threads, "Worker threads (0 = OpenMP default)");

  // power
  double rate = 30.0, noise_dbm = -85.0;
  int subsurfaces = 5, elements = 100, tx = 100, rx = 100;
  double d_tr = 51.0, d_v = 2.0, d_1 = 25.0;
  std::string ci_mode = "lognormal-exact";
  CLI::App* power = app.add_subcommand("power", "Average power needed for a target rate");
  power->add_option("--rate", rate, "Target rate, bits/s/Hz")->required();
  power->add_option("--k", subsurfaces, "Subsurface count")->capture_default_str();
  power->add_option("--n", elements, "Elements per subsurface")->capture_default_str();
  power->add_option("--nt", tx, "Transmit antennas")->capture_default_str();
  power->add_option("--nr", rx, "Receive antennas")->capture_default_str();
  power->add_option("--noise", noise_dbm, "Noise power, dBm")->capture_default_str();
  power->add_option("--d-tr", d_tr, "Transmitter-receiver distance, m")->capture_default_str();
  power->add_option("--d-v", d_v, "Vertical surface offset, m")->capture_default_str();
  power->add_option("--d-1", d_1, "Horizontal surface offset, m")->capture_default_str();
  power->add_option("--ci-mode", ci_mode, "lognormal-exact or paper")->capture_default_str();

  // optimal-k
  double target_rate = 30.0;
  int total_elements = 0;
  CLI::App* optimal = app.add_subcommand("optimal-k", "Subsurface count for a fixed element budget");
  optimal->add_option("--rate", target_rate, "Target rate, bits/s/Hz")->required();
  optimal->add_option("--m", total_elements, "Total element budget K*N");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      return run_simulate(config_path, out_dir, threads, seed_override, trials_override);
    }
    if (figure->parsed()) {
      return run_figure(figure_name, figure_out, settings, figure_threads);
    }
    if (power->parsed()) {
      irsmimo::ScenarioConfig geometry;
      geometry.distance_tx_rx = d_tr;
      geometry.vertical_offset = d_v;
      geometry.surface_offset = d_1;
      return run_power(rate, subsurfaces, elements, tx, rx, noise_dbm, geometry, ci_mode);
    }
    if (optimal->parsed()) {
      return run_optimal_k(target_rate, total_elements);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
