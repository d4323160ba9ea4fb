#pragma once

// Sliding-window min-plus attitude filter.

#include <cstddef>
#include <limits>

#include "minplus_attitude/minplus_value.hpp"

namespace minplus_attitude {

inline constexpr std::size_t kNoPruning = std::numeric_limits<std::size_t>::max();

struct FilterConfig {
  double dt = 0.1;
  /// Steps propagated before the expansion is re-anchored at the estimate.
  int window_len = 10;
  std::size_t prune_cap = 500;
  Weights weights;
  DisturbanceSet zset = DisturbanceSet::FromMagnitudes({0.5, 1.0});

  /// Throws std::invalid_argument on dt <= 0, window_len < 1, prune_cap < 1.
  void Validate() const;
};

struct FilterState {
  ValueExpansion expansion;
  Rotation anchor;
  int steps_in_window = 0;
};

struct FilterStepResult {
  FilterState state;
  Rotation estimate;
  double value = 0.0;
  /// Terms the estimate was extracted from (after pruning, before any
  /// re-anchoring).
  std::size_t term_count = 0;
};

FilterState FilterInit(const FilterConfig& cfg, const Rotation& r_hat0);

/// Propagate with (y, drift), prune, extract the estimate. When the window is
/// full the expansion collapses to a fresh terminal cost centred on the
/// estimate.
FilterStepResult FilterStep(const FilterState& state, const Rotation& y,
                            const AlgebraElement& drift,
                            const FilterConfig& cfg);

}  // namespace minplus_attitude
