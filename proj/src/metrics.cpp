#include "minplus_attitude/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace minplus_attitude {

namespace {

double TraceDistance(const Rotation& a, const Rotation& b) {
  return 3.0 - (a.matrix().transpose() * b.matrix()).trace();
}

}  // namespace

double MeasurementNoiseMetric(const Rotation& y, const Rotation& r_true) {
  return TraceDistance(y, r_true);
}

double TrackingError(const Rotation& r_hat, const Rotation& r_true) {
  return TraceDistance(r_hat, r_true);
}

RunSummary Summarize(std::span<const StepRecord> records) {
  if (records.empty()) {
    throw std::invalid_argument("cannot summarize an empty run");
  }
  RunSummary s;
  s.steps = records.size();
  s.max_te = records.front().tracking_error;
  double te_sum = 0.0;
  double noise_sum = 0.0;
  for (const StepRecord& r : records) {
    te_sum += r.tracking_error;
    noise_sum += r.meas_noise_metric;
    s.max_te = std::max(s.max_te, r.tracking_error);
  }
  const double n = static_cast<double>(records.size());
  s.mean_te = te_sum / n;
  s.mean_meas_noise = noise_sum / n;
  s.final_te = records.back().tracking_error;
  return s;
}

}  // namespace minplus_attitude
