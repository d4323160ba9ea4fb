#include "minplus_attitude/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace minplus_attitude::oracle {

double QuarterPenalty(const Matrix3& w, const Matrix3& q) {
  const Matrix3 d = q - Matrix3::Identity();
  return 0.25 * (d.transpose() * w * d).trace();
}

double BruteForceValue(const Rotation& r,
                       const std::vector<Observation>& history,
                       const FilterConfig& cfg, const Rotation& r_hat0) {
  const std::size_t steps = history.size();
  const std::vector<AlgebraElement>& zs = cfg.zset.elements();
  const std::size_t nz = zs.size();

  std::size_t sequences = 1;
  for (std::size_t k = 0; k < steps; ++k) {
    if (sequences > kMaxSequences / nz) {
      throw std::invalid_argument("too many disturbance sequences to enumerate");
    }
    sequences *= nz;
  }

  // transitions[k][j]: backward map over step k under disturbance j.
  std::vector<std::vector<Matrix3>> transitions(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    for (const AlgebraElement& z : zs) {
      transitions[k].push_back(
          so3::Expm((history[k].drift + z) * (-cfg.dt)).matrix());
    }
  }

  const Matrix3& k_inv = cfg.weights.k_inv();
  const Matrix3& l_inv = cfg.weights.l_inv();
  std::vector<std::size_t> choice(steps, 0);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sequences; ++s) {
    Matrix3 state = r.matrix();
    double cost = 0.0;
    for (std::size_t k = steps; k-- > 0;) {
      const Matrix3& z = zs[choice[k]].matrix();
      cost += 0.5 * (z.transpose() * z).trace() * cfg.dt;
      cost += QuarterPenalty(l_inv, state.transpose() * history[k].y.matrix()) *
              cfg.dt;
      state = state * transitions[k][choice[k]];
    }
    cost += QuarterPenalty(k_inv, state * r_hat0.matrix().transpose());
    best = std::min(best, cost);

    // Odometer over zset^steps.
    for (std::size_t k = 0; k < steps; ++k) {
      if (++choice[k] < nz) break;
      choice[k] = 0;
    }
  }
  return best;
}

GridResult GridSampleMin(const RotationFunction& f, std::size_t n,
                         std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("grid search needs at least one sample");
  }
  std::mt19937_64 rng(seed);
  GridResult best{so3::SampleHaar(rng), 0.0};
  best.value = f(best.rotation);
  for (std::size_t i = 1; i < n; ++i) {
    Rotation candidate = so3::SampleHaar(rng);
    const double value = f(candidate);
    if (value < best.value) {
      best = GridResult{candidate, value};
    }
  }
  return best;
}

GridResult CompassRefine(const RotationFunction& f, const Rotation& start,
                         double initial_step) {
  GridResult current{start, f(start)};
  double step = initial_step;
  for (int iter = 0; iter < 100000 && step > 1e-10; ++iter) {
    bool improved = false;
    for (int i = 1; i <= 6; ++i) {
      Rotation candidate =
          current.rotation * so3::Expm(step * so3::BasisElement(i));
      const double value = f(candidate);
      if (value < current.value) {
        current = GridResult{candidate, value};
        improved = true;
      }
    }
    if (!improved) {
      step *= 0.5;
    }
  }
  return current;
}

GridResult GridMinSO3(const RotationFunction& f, std::size_t n,
                      std::uint64_t seed) {
  return CompassRefine(f, GridSampleMin(f, n, seed).rotation);
}

}  // namespace minplus_attitude::oracle
