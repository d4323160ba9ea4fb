#pragma once

#include <cstddef>
#include <span>

#include "minplus_attitude/so3.hpp"

namespace minplus_attitude {

using so3::Rotation;

/// tr(I - y^T r_true), in [0, 4].
double MeasurementNoiseMetric(const Rotation& y, const Rotation& r_true);

/// tr(I - r_hat^T r_true), in [0, 4]; zero iff r_hat = r_true.
double TrackingError(const Rotation& r_hat, const Rotation& r_true);

/// One logged filter step.
struct StepRecord {
  double t = 0.0;
  Rotation r_true;
  Rotation y;
  Rotation r_hat;
  double meas_noise_metric = 0.0;
  double tracking_error = 0.0;
  double value = 0.0;
  std::size_t term_count = 0;
};

struct RunSummary {
  double mean_te = 0.0;
  double max_te = 0.0;
  double mean_meas_noise = 0.0;
  double final_te = 0.0;
  std::size_t steps = 0;
};

/// Throws std::invalid_argument on an empty run.
RunSummary Summarize(std::span<const StepRecord> records);

}  // namespace minplus_attitude
