#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "minplus_attitude/config.hpp"

namespace minplus_attitude {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

/// Reads the config (optional when a preset override is given), runs the
/// experiment and writes the per-step CSV to `output_path` and the summary to
/// `output_path + ".summary"`. Diagnostics and the summary go to `log`.
///
/// Returns kExitOk, kExitConfigError on a parse/validation failure (the
/// message names the key) or kExitIoError when a file cannot be read or
/// written.
int RunScenario(const std::optional<std::string>& config_path,
                const std::string& output_path,
                const ConfigOverrides& overrides, std::ostream& log);

}  // namespace minplus_attitude
