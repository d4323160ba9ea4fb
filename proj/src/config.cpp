#include "minplus_attitude/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace minplus_attitude {

namespace {

constexpr std::array<const char*, 18> kKnownKeys = {
    "scenario",           "dt",
    "steps",              "seed",
    "window_len",         "prune_cap",
    "k_inv_diag",         "l_inv_diag",
    "drift_coeffs",       "process_noise_kind",
    "process_noise_dirs", "process_noise_scale",
    "meas_noise_kind",    "meas_noise_dirs",
    "meas_noise_scale",   "init_error_coeffs",
    "z_magnitudes",       "swap_case3_dirs",
};

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::string spaced = value;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<std::string> items;
  for (std::string item; in >> item;) {
    items.push_back(item);
  }
  return items;
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& text) {
  T out{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key, "cannot parse '" + text + "' as a number");
  }
  return out;
}

template <typename T>
std::vector<T> ParseList(const std::string& key, const std::string& value) {
  std::vector<T> out;
  for (const std::string& item : SplitList(value)) {
    out.push_back(ParseNumber<T>(key, item));
  }
  return out;
}

so3::Vector3 ParseVector3(const std::string& key, const std::string& value) {
  const std::vector<double> v = ParseList<double>(key, value);
  if (v.size() != 3) {
    throw ConfigError(key, "expected 3 reals, got " + std::to_string(v.size()));
  }
  return so3::Vector3(v[0], v[1], v[2]);
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key, "expected true/false, got '" + value + "'");
}

NoiseKind ParseKind(const std::string& key, const std::string& value) {
  if (value == "gaussian") return NoiseKind::kGaussian;
  if (value == "uniform") return NoiseKind::kUniform;
  throw ConfigError(key, "expected gaussian or uniform, got '" + value + "'");
}

std::map<std::string, std::string> ReadKeyValues(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = Trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, "line " + std::to_string(line_no) +
                                  " is not of the form key = value");
    }
    std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) ==
        kKnownKeys.end()) {
      throw ConfigError(key, "unknown key");
    }
    if (!entries.emplace(key, value).second) {
      throw ConfigError(key, "key given more than once");
    }
  }
  return entries;
}

Matrix3 DiagonalWeight(const std::string& key, const std::string& value) {
  const so3::Vector3 d = ParseVector3(key, value);
  if (!(d.minCoeff() > 0.0)) {
    throw ConfigError(key, "weights must be positive");
  }
  return d.asDiagonal();
}

}  // namespace

ExperimentConfig ParseExperimentConfig(std::istream& in,
                                       const ConfigOverrides& overrides) {
  const std::map<std::string, std::string> kv = ReadKeyValues(in);
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  std::string scenario = "custom";
  if (const auto* v = get("scenario")) scenario = *v;
  if (overrides.preset) scenario = *overrides.preset;

  bool swap = false;
  if (const auto* v = get("swap_case3_dirs")) {
    swap = ParseBool("swap_case3_dirs", *v);
  }

  ExperimentConfig cfg;
  if (scenario == "custom") {
    cfg.scenario.name = "custom";
  } else {
    try {
      cfg.scenario = ScenarioPreset(scenario, swap);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("scenario", e.what());
    }
  }

  ScenarioConfig& sc = cfg.scenario;
  if (const auto* v = get("dt")) sc.dt = ParseNumber<double>("dt", *v);
  if (const auto* v = get("steps")) sc.steps = ParseNumber<int>("steps", *v);
  if (const auto* v = get("seed")) {
    sc.seed = ParseNumber<std::uint64_t>("seed", *v);
  }
  if (overrides.seed) sc.seed = *overrides.seed;
  if (const auto* v = get("drift_coeffs")) {
    sc.drift = so3::Hat(ParseVector3("drift_coeffs", *v));
  }
  if (const auto* v = get("init_error_coeffs")) {
    sc.initial_estimate_error = so3::Hat(ParseVector3("init_error_coeffs", *v));
  }
  if (const auto* v = get("process_noise_kind")) {
    sc.process_noise.kind = ParseKind("process_noise_kind", *v);
  }
  if (const auto* v = get("process_noise_dirs")) {
    sc.process_noise.directions = ParseList<int>("process_noise_dirs", *v);
  }
  if (const auto* v = get("process_noise_scale")) {
    sc.process_noise.scale = ParseNumber<double>("process_noise_scale", *v);
  }
  if (const auto* v = get("meas_noise_kind")) {
    sc.measurement_noise.kind = ParseKind("meas_noise_kind", *v);
  }
  if (const auto* v = get("meas_noise_dirs")) {
    sc.measurement_noise.directions = ParseList<int>("meas_noise_dirs", *v);
  }
  if (const auto* v = get("meas_noise_scale")) {
    sc.measurement_noise.scale = ParseNumber<double>("meas_noise_scale", *v);
  }

  if (const auto* v = get("window_len")) {
    cfg.window_len = ParseNumber<int>("window_len", *v);
  }
  if (const auto* v = get("prune_cap")) {
    cfg.prune_cap = ParseNumber<std::size_t>("prune_cap", *v);
  }
  Matrix3 k_inv = cfg.weights.k_inv();
  Matrix3 l_inv = cfg.weights.l_inv();
  if (const auto* v = get("k_inv_diag")) k_inv = DiagonalWeight("k_inv_diag", *v);
  if (const auto* v = get("l_inv_diag")) l_inv = DiagonalWeight("l_inv_diag", *v);
  cfg.weights = Weights(k_inv, l_inv);
  if (const auto* v = get("z_magnitudes")) {
    cfg.z_magnitudes = ParseList<double>("z_magnitudes", *v);
  }

  const auto require = [](bool ok, const char* key, const char* message) {
    if (!ok) throw ConfigError(key, message);
  };
  const auto valid_dirs = [](const std::vector<int>& dirs) {
    return !dirs.empty() && std::all_of(dirs.begin(), dirs.end(),
                                        [](int d) { return d >= 1 && d <= 6; });
  };
  require(std::isfinite(sc.dt) && sc.dt > 0.0, "dt", "must be positive");
  require(sc.steps >= 1, "steps", "must be at least 1");
  require(cfg.window_len >= 1, "window_len", "must be at least 1");
  require(cfg.prune_cap >= 1, "prune_cap", "must be at least 1");
  require(valid_dirs(sc.process_noise.directions), "process_noise_dirs",
          "needs one or more basis indices in 1..6");
  require(valid_dirs(sc.measurement_noise.directions), "meas_noise_dirs",
          "needs one or more basis indices in 1..6");
  require(std::isfinite(sc.process_noise.scale) && sc.process_noise.scale >= 0.0, "process_noise_scale",
          "must be finite and >= 0");
  require(std::isfinite(sc.measurement_noise.scale) &&
              sc.measurement_noise.scale >= 0.0, "meas_noise_scale",
          "must be finite and >= 0");
  require(!cfg.z_magnitudes.empty() &&
              std::all_of(cfg.z_magnitudes.begin(), cfg.z_magnitudes.end(),
                          [](double m) { return std::isfinite(m) && m > 0.0; }),
          "z_magnitudes", "needs one or more positive magnitudes");
  return cfg;
}

ExperimentConfig ParseExperimentConfig(const std::string& text,
                                       const ConfigOverrides& overrides) {
  std::istringstream in(text);
  return ParseExperimentConfig(in, overrides);
}

}  // namespace minplus_attitude
