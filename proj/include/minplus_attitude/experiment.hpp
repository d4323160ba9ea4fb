#pragma once

// Simulate a scenario and run the filter over it.

#include <cstddef>
#include <ostream>
#include <vector>

#include "minplus_attitude/filter_runtime.hpp"
#include "minplus_attitude/metrics.hpp"
#include "minplus_attitude/simulation.hpp"

namespace minplus_attitude {

struct ExperimentConfig {
  ScenarioConfig scenario;
  int window_len = 10;
  std::size_t prune_cap = 500;
  Weights weights;
  std::vector<double> z_magnitudes{0.5, 1.0};

  /// Filter settings; the scenario's dt drives the filter too.
  FilterConfig Filter() const;
};

std::vector<StepRecord> RunExperiment(const ExperimentConfig& cfg);

/// Header line of the per-step CSV (no trailing newline).
std::string CsvHeader();

/// Header plus one row per record; 17 significant digits.
void WriteCsv(std::ostream& out, const std::vector<StepRecord>& records);

/// key=value lines.
void WriteSummary(std::ostream& out, const RunSummary& summary);

}  // namespace minplus_attitude
