#include "minplus_attitude/simulation.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace minplus_attitude {

void NoiseModel::Validate() const {
  if (directions.empty()) {
    throw std::invalid_argument("noise model needs at least one direction");
  }
  for (int d : directions) {
    if (d < 1 || d > 6) {
      throw std::invalid_argument("noise direction must be in 1..6");
    }
  }
  if (!std::isfinite(scale) || scale < 0.0) {
    throw std::invalid_argument("noise scale must be finite and >= 0");
  }
}

void ScenarioConfig::Validate() const {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("scenario dt must be positive");
  }
  if (steps < 1) {
    throw std::invalid_argument("scenario steps must be at least 1");
  }
  process_noise.Validate();
  measurement_noise.Validate();
}

AlgebraElement SampleDisturbance(const NoiseModel& nm, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, nm.directions.size() - 1);
  const int direction = nm.directions[pick(rng)];
  double amplitude;
  if (nm.kind == NoiseKind::kGaussian) {
    amplitude = std::normal_distribution<double>(0.0, 1.0)(rng);
  } else {
    amplitude = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  }
  return (nm.scale * amplitude) * so3::BasisElement(direction);
}

std::vector<SimSample> Simulate(const ScenarioConfig& cfg) {
  cfg.Validate();
  std::mt19937_64 rng(cfg.seed);

  std::vector<SimSample> samples;
  samples.reserve(static_cast<std::size_t>(cfg.steps));
  Rotation r = Rotation::Identity();
  for (int k = 1; k <= cfg.steps; ++k) {
    const AlgebraElement z = SampleDisturbance(cfg.process_noise, rng);
    const AlgebraElement eps = SampleDisturbance(cfg.measurement_noise, rng);
    r = r * so3::Expm((cfg.drift + z) * cfg.dt);
    samples.push_back(SimSample{k * cfg.dt, r, r * so3::Expm(eps), cfg.drift});
  }
  return samples;
}

Rotation InitialEstimate(const ScenarioConfig& cfg) {
  return so3::Expm(cfg.initial_estimate_error);
}

const std::vector<std::string>& PresetNames() {
  static const std::vector<std::string> names{"case1", "case2", "case3",
                                              "case4", "case5-uniform"};
  return names;
}

ScenarioConfig ScenarioPreset(const std::string& name, bool swap_case3_dirs) {
  ScenarioConfig cfg;
  cfg.name = name;
  cfg.process_noise.scale = kDefaultProcessNoiseScale;
  cfg.measurement_noise.scale = kDefaultMeasurementNoiseScale;

  if (name == "case1") {
    cfg.process_noise.directions = {1};
    cfg.measurement_noise.directions = {1};
    return cfg;
  }
  cfg.drift = so3::BasisElement(1);
  if (name == "case2") {
    cfg.process_noise.directions = {1};
    cfg.measurement_noise.directions = {1};
    return cfg;
  }
  if (name != "case3" && name != "case4" && name != "case5-uniform") {
    throw std::invalid_argument("unknown scenario preset '" + name + "'");
  }

  cfg.process_noise.directions = {3, 4};
  cfg.measurement_noise.directions = {1, 2};
  if (swap_case3_dirs) {
    std::swap(cfg.process_noise.directions, cfg.measurement_noise.directions);
  }
  if (name == "case4") {
    cfg.initial_estimate_error = so3::Hat(so3::Vector3(0.3, 0.3, 0.3));
  } else if (name == "case5-uniform") {
    cfg.process_noise.kind = NoiseKind::kUniform;
    cfg.measurement_noise.kind = NoiseKind::kUniform;
  }
  return cfg;
}

}  // namespace minplus_attitude
