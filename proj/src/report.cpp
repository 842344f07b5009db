#include "irsmimo/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace irsmimo {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string render_results_csv(const RateReport& report) {
  std::ostringstream out;
  out << "trial,exact_rate,asymptotic_rate,epa_formula_rate,power_watts\n";
  for (std::size_t t = 0; t < report.trials.size(); ++t) {
    const TrialRecord& record = report.trials[t];
    out << t << ',' << format_double(record.exact_rate) << ','
        << format_double(record.asymptotic_rate) << ','
        << format_double(record.epa_formula_rate) << ','
        << format_double(record.power_watts) << '\n';
  }
  return out.str();
}

namespace {

nlohmann::json metric_json(const MetricSummary& summary) {
  return {{"mean", summary.mean}, {"stddev", summary.stddev}, {"stderr", summary.stderror}};
}

std::string digest_hex(std::uint64_t digest) {
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(digest));
  return buffer;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << text;
}

}  // namespace

std::string render_summary_json(const RateReport& report, const ScenarioConfig& config) {
  nlohmann::json summary;
  summary["version"] = report.version;
  summary["config_digest"] = digest_hex(report.config_digest);
  summary["seed"] = report.seed;
  summary["trials"] = report.trials.size();
  summary["metrics"] = {{"exact_rate", metric_json(report.exact)},
                        {"asymptotic_rate", metric_json(report.asymptotic)},
                        {"epa_formula_rate", metric_json(report.epa_formula)}};
  summary["config_text"] = serialize_config(config);
  return summary.dump(2) + "\n";
}

void emit_report(const RateReport& report, const ScenarioConfig& config,
                 const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_text(out_dir / "results.csv", render_results_csv(report));
  write_text(out_dir / "summary.json", render_summary_json(report, config));
}

std::string render_figure_csv(const FigureDataset& dataset) {
  std::ostringstream out;
  out << dataset.sweep_label << ",curve,mean,stderr,trials\n";
  for (const FigureRow& row : dataset.rows) {
    out << format_double(row.sweep) << ',' << row.curve << ',' << format_double(row.mean)
        << ',' << format_double(row.stderror) << ',' << row.trials << '\n';
  }
  return out.str();
}

void write_figure_csv(const FigureDataset& dataset, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  write_text(file, render_figure_csv(dataset));
}

}  // namespace irsmimo
