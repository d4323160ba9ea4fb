#include "minplus_attitude/experiment.hpp"

#include <string>

namespace minplus_attitude {

namespace {

void AppendMatrix(std::ostream& out, const so3::Matrix3& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out << ',' << m(i, j);
    }
  }
}

void AppendMatrixNames(std::string& header, const char* prefix) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      header += ',';
      header += prefix;
      header += '_';
      header += std::to_string(i);
      header += std::to_string(j);
    }
  }
}

}  // namespace

FilterConfig ExperimentConfig::Filter() const {
  FilterConfig fc{scenario.dt, window_len, prune_cap, weights,
                  DisturbanceSet::FromMagnitudes(z_magnitudes)};
  fc.Validate();
  return fc;
}

std::vector<StepRecord> RunExperiment(const ExperimentConfig& cfg) {
  const FilterConfig filter = cfg.Filter();
  const std::vector<SimSample> samples = Simulate(cfg.scenario);

  std::vector<StepRecord> records;
  records.reserve(samples.size());
  FilterState state = FilterInit(filter, InitialEstimate(cfg.scenario));
  for (const SimSample& s : samples) {
    FilterStepResult step = FilterStep(state, s.y, s.drift, filter);
    StepRecord rec;
    rec.t = s.t;
    rec.r_true = s.r_true;
    rec.y = s.y;
    rec.r_hat = step.estimate;
    rec.meas_noise_metric = MeasurementNoiseMetric(s.y, s.r_true);
    rec.tracking_error = TrackingError(step.estimate, s.r_true);
    rec.value = step.value;
    rec.term_count = step.term_count;
    records.push_back(rec);
    state = std::move(step.state);
  }
  return records;
}

std::string CsvHeader() {
  std::string header = "t,meas_noise,tracking_error,value,term_count";
  AppendMatrixNames(header, "rhat");
  AppendMatrixNames(header, "rtrue");
  AppendMatrixNames(header, "y");
  return header;
}

void WriteCsv(std::ostream& out, const std::vector<StepRecord>& records) {
  const auto old_precision = out.precision(17);
  out << CsvHeader() << '\n';
  for (const StepRecord& r : records) {
    out << r.t << ',' << r.meas_noise_metric << ',' << r.tracking_error << ','
        << r.value << ',' << r.term_count;
    AppendMatrix(out, r.r_hat.matrix());
    AppendMatrix(out, r.r_true.matrix());
    AppendMatrix(out, r.y.matrix());
    out << '\n';
  }
  out.precision(old_precision);
}

void WriteSummary(std::ostream& out, const RunSummary& summary) {
  const auto old_precision = out.precision(17);
  out << "steps=" << summary.steps << '\n'
      << "mean_te=" << summary.mean_te << '\n'
      << "max_te=" << summary.max_te << '\n'
      << "final_te=" << summary.final_te << '\n'
      << "mean_meas_noise=" << summary.mean_meas_noise << '\n';
  out.precision(old_precision);
}

}  // namespace minplus_attitude
