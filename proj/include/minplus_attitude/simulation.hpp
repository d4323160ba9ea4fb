#pragma once

// Ground truth and measurement generation for the attitude scenarios.
//
// Dynamics are R' = R (A + z), measurements Y = R eps. Both z and eps are
// drawn as scaled basis directions; eps is exponentiated onto SO(3).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minplus_attitude/so3.hpp"

namespace minplus_attitude {

using so3::AlgebraElement;
using so3::Rotation;

enum class NoiseKind { kGaussian, kUniform };

struct NoiseModel {
  NoiseKind kind = NoiseKind::kGaussian;
  /// Basis indices in 1..6; one is drawn uniformly per sample.
  std::vector<int> directions{1};
  double scale = 0.0;

  void Validate() const;
};

struct ScenarioConfig {
  std::string name = "custom";
  AlgebraElement drift;
  NoiseModel process_noise;
  NoiseModel measurement_noise;
  /// Prior estimate is expm(initial_estimate_error) against R(0) = I.
  AlgebraElement initial_estimate_error;
  double dt = 0.1;
  int steps = 100;
  std::uint64_t seed = 1;

  void Validate() const;
};

/// One simulated step k in 1..steps.
struct SimSample {
  double t = 0.0;
  Rotation r_true;
  Rotation y;
  /// Drift applied over the interval ending at t.
  AlgebraElement drift;
};

inline constexpr double kDefaultProcessNoiseScale = 0.3;
inline constexpr double kDefaultMeasurementNoiseScale = 0.2;

/// gaussian: scale * g * H_d, g ~ N(0, 1); uniform: scale * u * H_d,
/// u ~ U(-1, 1); d drawn uniformly from the model's directions.
AlgebraElement SampleDisturbance(const NoiseModel& nm, std::mt19937_64& rng);

/// Deterministic in cfg (seed included). Returns cfg.steps samples; the
/// unlogged state at t = 0 is the identity.
std::vector<SimSample> Simulate(const ScenarioConfig& cfg);

Rotation InitialEstimate(const ScenarioConfig& cfg);

/// Names: case1, case2, case3, case4, case5-uniform. `swap_case3_dirs`
/// exchanges the process and measurement directions of case3..case5.
/// Throws std::invalid_argument on an unknown name.
ScenarioConfig ScenarioPreset(const std::string& name,
                              bool swap_case3_dirs = false);

const std::vector<std::string>& PresetNames();

}  // namespace minplus_attitude
