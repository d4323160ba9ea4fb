// Simulate one attitude scenario, run the min-plus filter over it and write
// the per-step CSV.
//
//   attitude_filter --preset case3 --out case3.csv
//   attitude_filter --config run.cfg --out run.csv --seed 4

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "minplus_attitude/run_scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Min-plus attitude filter scenario runner"};

  std::string config_path;
  std::string out_path;
  std::string preset;
  std::uint64_t seed = 0;
  auto* config_opt = app.add_option("--config", config_path, "Config file");
  app.add_option("--out", out_path, "Output CSV path")->required();
  auto* preset_opt =
      app.add_option("--preset", preset, "Scenario preset (overrides config)");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : minplus_attitude::kExitConfigError;
  }

  minplus_attitude::ConfigOverrides overrides;
  if (*preset_opt) overrides.preset = preset;
  if (*seed_opt) overrides.seed = seed;
  std::optional<std::string> config;
  if (*config_opt) config = config_path;

  return minplus_attitude::RunScenario(config, out_path, overrides, std::cout);
}
