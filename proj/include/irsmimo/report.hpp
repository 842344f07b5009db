#pragma once

#include <filesystem>
#include <string>

#include "irsmimo/figures.hpp"
#include "irsmimo/montecarlo.hpp"

namespace irsmimo {

// Shortest exact decimal form of a double ("%.17g"); identical inputs always
// produce identical bytes.
std::string format_double(double value);

// Writes results.csv (one row per trial) and summary.json (aggregates plus
// the resolved config and seed) into out_dir, creating it if needed. Neither
// file contains timestamps, so outputs are byte-reproducible.
void emit_report(const RateReport& report, const ScenarioConfig& config,
                 const std::filesystem::path& out_dir);

std::string render_results_csv(const RateReport& report);
std::string render_summary_json(const RateReport& report, const ScenarioConfig& config);

void write_figure_csv(const FigureDataset& dataset, const std::filesystem::path& file);
std::string render_figure_csv(const FigureDataset& dataset);

}  // namespace irsmimo
