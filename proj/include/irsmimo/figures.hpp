#pragma once

#include <string>
#include <utility>
#include <vector>

#include "irsmimo/montecarlo.hpp"

namespace irsmimo {

struct FigureRow {
  double sweep = 0.0;
  std::string curve;
  double mean = 0.0;
  double stderror = 0.0;
  std::size_t trials = 0;
};

struct FigureDataset {
  std::string name;
  std::string sweep_label;
  std::vector<FigureRow> rows;
};

// Names of the built-in figure experiments, in order.
std::vector<std::string> figure_names();

// Scenario a figure starts from before its sweep overrides; exposed so the
// defaults can be pinned by tests.
ScenarioConfig figure_base_config(const std::string& name);

// Runs one figure experiment. `overrides` are config key/value settings
// applied on top of the figure defaults. Throws on unknown figure names.
FigureDataset figure_command(const std::string& name,
                             const std::vector<std::pair<std::string, std::string>>& overrides = {},
                             Execution execution = Execution::OpenMP, int threads = 0);

// Per-draw vectors of the K per-subsurface attenuation products g1*g2 for
// power experiments. The two shadowing terms of each product are drawn as one
// normal via their sum; each subsurface's stream is stratified over the draw
// count (Latin hypercube), which keeps the sample mean of sums of products
// tight while every draw stays an honest sample.
std::vector<std::vector<double>> sample_gain_products(const PathLossParams& leg1,
                                                      const PathLossParams& leg2,
                                                      int subsurfaces, std::size_t draws,
                                                      std::uint64_t seed);

}  // namespace irsmimo
