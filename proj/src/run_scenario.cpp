#include "minplus_attitude/run_scenario.hpp"

#include <fstream>
#include <sstream>

namespace minplus_attitude {

int RunScenario(const std::optional<std::string>& config_path,
                const std::string& output_path,
                const ConfigOverrides& overrides, std::ostream& log) {
  std::string text;
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) {
      log << "error: cannot read config file '" << *config_path << "'\n";
      return kExitIoError;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else if (!overrides.preset) {
    log << "error: need --config or --preset\n";
    return kExitConfigError;
  }

  ExperimentConfig cfg;
  try {
    cfg = ParseExperimentConfig(text, overrides);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  std::ofstream csv(output_path, std::ios::binary | std::ios::trunc);
  if (!csv) {
    log << "error: cannot open '" << output_path << "' for writing\n";
    return kExitIoError;
  }

  const std::vector<StepRecord> records = RunExperiment(cfg);
  const RunSummary summary = Summarize(records);
  WriteCsv(csv, records);
  csv.close();
  if (!csv) {
    log << "error: failed writing '" << output_path << "'\n";
    return kExitIoError;
  }

  const std::string summary_path = output_path + ".summary";
  std::ofstream summary_file(summary_path, std::ios::binary | std::ios::trunc);
  WriteSummary(summary_file, summary);
  summary_file.close();
  if (!summary_file) {
    log << "error: failed writing '" << summary_path << "'\n";
    return kExitIoError;
  }

  log << "scenario=" << cfg.scenario.name << '\n';
  WriteSummary(log, summary);
  return kExitOk;
}

}  // namespace minplus_attitude
