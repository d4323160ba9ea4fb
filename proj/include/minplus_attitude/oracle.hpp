#pragma once

// Brute-force references for certifying the min-plus engine. Slow by
// construction; none of this calls the propagation, evaluation or Procrustes
// code it is used to check.

#include <cstdint>
#include <functional>
#include <vector>

#include "minplus_attitude/filter_runtime.hpp"

namespace minplus_attitude::oracle {

struct Observation {
  Rotation y;
  AlgebraElement drift;
};

inline constexpr std::size_t kMaxSequences = 1'000'000;

/// 1/4 tr[(q - I)^T w (q - I)].
double QuarterPenalty(const Matrix3& w, const Matrix3& q);

/// Minimum over every disturbance sequence in zset^n of the discretized
/// filtering cost for a current state `r`, with `history` ordered oldest
/// first. States are rolled backward from r with expm(-(a + z) dt). Throws
/// std::invalid_argument when |zset|^n exceeds kMaxSequences.
double BruteForceValue(const Rotation& r,
                       const std::vector<Observation>& history,
                       const FilterConfig& cfg, const Rotation& r_hat0);

struct GridResult {
  Rotation rotation;
  double value = 0.0;
};

using RotationFunction = std::function<double(const Rotation&)>;

/// Best of n Haar-uniform samples drawn from `seed`. Sample sets are nested
/// in n for a fixed seed.
GridResult GridSampleMin(const RotationFunction& f, std::size_t n,
                         std::uint64_t seed = 7);

/// Compass search on SO(3) from `start` along right-multiplied exp(+-h H_i),
/// halving h when no direction improves.
GridResult CompassRefine(const RotationFunction& f, const Rotation& start,
                         double initial_step = 0.05);

/// GridSampleMin followed by CompassRefine of the best sample. Still an upper
/// bound on the true minimum.
GridResult GridMinSO3(const RotationFunction& f, std::size_t n,
                      std::uint64_t seed = 7);

}  // namespace minplus_attitude::oracle
