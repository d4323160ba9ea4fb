#pragma once

// Flat key-value experiment configuration.
//
//   # comment
//   scenario = case3
//   dt = 0.1
//   k_inv_diag = 1 1 1
//   z_magnitudes = 0.5, 1.0
//
// Lists may be separated by whitespace or commas. Unknown or repeated keys
// are errors. A named preset supplies the scenario defaults; any key given
// explicitly overrides the preset. "custom" starts from a noise-free,
// drift-free scenario.

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include "minplus_attitude/experiment.hpp"

namespace minplus_attitude {

/// Parse or validation failure attributed to one config key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message),
        key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct ConfigOverrides {
  std::optional<std::string> preset;
  std::optional<std::uint64_t> seed;
};

ExperimentConfig ParseExperimentConfig(std::istream& in,
                                       const ConfigOverrides& overrides = {});

ExperimentConfig ParseExperimentConfig(const std::string& text,
                                       const ConfigOverrides& overrides = {});

}  // namespace minplus_attitude
