#include "minplus_attitude/filter_runtime.hpp"

#include <stdexcept>

namespace minplus_attitude {

void FilterConfig::Validate() const {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("filter dt must be positive");
  }
  if (window_len < 1) {
    throw std::invalid_argument("window_len must be at least 1");
  }
  if (prune_cap < 1) {
    throw std::invalid_argument("prune_cap must be at least 1");
  }
}

FilterState FilterInit(const FilterConfig& cfg, const Rotation& r_hat0) {
  cfg.Validate();
  return FilterState{InitialExpansion(cfg.weights, r_hat0), r_hat0, 0};
}

FilterStepResult FilterStep(const FilterState& state, const Rotation& y,
                            const AlgebraElement& drift,
                            const FilterConfig& cfg) {
  ValueExpansion next = Prune(
      Propagate(state.expansion, y, drift, cfg.dt, cfg.zset, cfg.weights),
      cfg.prune_cap);
  const Minimizer estimate = ExtractEstimate(next);
  const std::size_t term_count = next.size();

  FilterState out{std::move(next), state.anchor, state.steps_in_window + 1};
  if (out.steps_in_window >= cfg.window_len) {
    out.expansion = InitialExpansion(cfg.weights, estimate.rotation);
    out.anchor = estimate.rotation;
    out.steps_in_window = 0;
  }
  return FilterStepResult{std::move(out), estimate.rotation, estimate.value,
                          term_count};
}

}  // namespace minplus_attitude
