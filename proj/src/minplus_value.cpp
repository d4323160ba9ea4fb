#include "minplus_attitude/minplus_value.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace minplus_attitude {

namespace {

constexpr double kDuplicateTolerance = 1e-10;
// Duplicate terms have TermMin values within ~1e-9 of each other; only
// candidates inside this window are compared entrywise.
constexpr double kDuplicateValueWindow = 1e-8;

void RequireSymmetricPositiveDefinite(const Matrix3& m, const char* name) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(name) + " has non-finite entries");
  }
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument(std::string(name) + " is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Matrix3> eig(m, Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) {
    throw std::invalid_argument(std::string(name) +
                                " is not positive definite");
  }
}

bool NearlyEqual(const AffineTerm& a, const AffineTerm& b) {
  return std::abs(a.offset - b.offset) < kDuplicateTolerance &&
         (a.coefficient - b.coefficient).cwiseAbs().maxCoeff() <
             kDuplicateTolerance;
}

}  // namespace

ValueExpansion::ValueExpansion(std::vector<AffineTerm> terms, int step_index)
    : terms_(std::move(terms)), step_index_(step_index) {
  if (terms_.empty()) {
    throw std::invalid_argument("value expansion needs at least one term");
  }
  if (step_index_ < 0) {
    throw std::invalid_argument("step index must be non-negative");
  }
  for (const AffineTerm& t : terms_) {
    if (!std::isfinite(t.offset) || !t.coefficient.allFinite()) {
      throw std::invalid_argument("affine term has non-finite entries");
    }
  }
}

double ValueExpansion::Evaluate(const Rotation& r) const {
  double best = terms_.front().Evaluate(r);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    best = std::min(best, terms_[i].Evaluate(r));
  }
  return best;
}

DisturbanceSet::DisturbanceSet(std::vector<AlgebraElement> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw std::invalid_argument("disturbance set is empty");
  }
  const bool has_zero =
      std::any_of(elements_.begin(), elements_.end(),
                  [](const AlgebraElement& z) { return z.IsZero(); });
  if (!has_zero) {
    throw std::invalid_argument("disturbance set must contain zero");
  }
}

DisturbanceSet DisturbanceSet::FromMagnitudes(
    const std::vector<double>& magnitudes) {
  std::vector<AlgebraElement> elements{AlgebraElement::Zero()};
  for (double m : magnitudes) {
    if (!std::isfinite(m) || m <= 0.0) {
      throw std::invalid_argument("disturbance magnitudes must be positive");
    }
    for (int i = 1; i <= 6; ++i) {
      elements.push_back(m * so3::BasisElement(i));
    }
  }
  return DisturbanceSet(std::move(elements));
}

Weights::Weights(const Matrix3& k_inv, const Matrix3& l_inv)
    : k_inv_(k_inv), l_inv_(l_inv) {
  RequireSymmetricPositiveDefinite(k_inv_, "K^-1");
  RequireSymmetricPositiveDefinite(l_inv_, "L^-1");
}

ValueExpansion InitialExpansion(const Weights& weights,
                                const Rotation& r_hat0) {
  AffineTerm term;
  term.offset = 0.5 * weights.k_inv().trace();
  term.coefficient = r_hat0.matrix().transpose() * weights.k_inv();
  return ValueExpansion({term}, 0);
}

Rotation BackwardTransition(const AlgebraElement& drift,
                            const AlgebraElement& disturbance, double dt) {
  return so3::Expm((drift + disturbance) * (-dt));
}

ValueExpansion Propagate(const ValueExpansion& v, const Rotation& y,
                         const AlgebraElement& drift, double dt,
                         const DisturbanceSet& zset, const Weights& weights) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("propagation step dt must be positive");
  }
  const std::size_t nz = zset.size();

  std::vector<Matrix3> transitions;
  std::vector<double> stage_offsets;
  transitions.reserve(nz);
  stage_offsets.reserve(nz);
  const double measurement_offset = 0.5 * weights.l_inv().trace() * dt;
  for (const AlgebraElement& z : zset.elements()) {
    transitions.push_back(BackwardTransition(drift, z, dt).matrix());
    stage_offsets.push_back(0.5 * z.matrix().squaredNorm() * dt +
                            measurement_offset);
  }
  const Matrix3 measurement_coeff =
      weights.l_inv().transpose() * y.matrix().transpose() * dt;

  std::vector<AffineTerm> next;
  next.reserve(v.size() * nz);
  for (const AffineTerm& parent : v.terms()) {
    for (std::size_t j = 0; j < nz; ++j) {
      AffineTerm child;
      child.offset = parent.offset + stage_offsets[j];
      child.coefficient = measurement_coeff + transitions[j] * parent.coefficient;
      next.push_back(child);
    }
  }
  return ValueExpansion(std::move(next), v.step_index() + 1);
}

Minimizer TermMin(const AffineTerm& t) {
  const so3::ProcrustesResult best = so3::ProcrustesMax(t.coefficient);
  return Minimizer{best.rotation, t.offset - 0.5 * best.value};
}

Minimizer ExtractEstimate(const ValueExpansion& v) {
  const std::vector<AffineTerm>& terms = v.terms();
  Minimizer best = TermMin(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) {
    Minimizer candidate = TermMin(terms[i]);
    if (candidate.value < best.value) {
      best = candidate;
    }
  }
  return best;
}

ValueExpansion Prune(const ValueExpansion& v, std::size_t cap) {
  if (cap < 1) {
    throw std::invalid_argument("prune cap must be at least 1");
  }
  const std::vector<AffineTerm>& terms = v.terms();
  if (terms.size() <= cap) {
    return v;
  }

  std::vector<double> keys(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    keys[i] = TermMin(terms[i]).value;
  }

  // Drop duplicates, keeping the earliest occurrence.
  std::vector<std::size_t> unique;
  unique.reserve(terms.size());
  std::multimap<double, std::size_t> kept_by_key;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto lo = kept_by_key.lower_bound(keys[i] - kDuplicateValueWindow);
    const auto hi = kept_by_key.upper_bound(keys[i] + kDuplicateValueWindow);
    const bool duplicate = std::any_of(lo, hi, [&](const auto& entry) {
      return NearlyEqual(terms[entry.second], terms[i]);
    });
    if (!duplicate) {
      kept_by_key.emplace(keys[i], i);
      unique.push_back(i);
    }
  }

  if (unique.size() > cap) {
    const auto by_key = [&](std::size_t a, std::size_t b) {
      return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
    };
    std::nth_element(unique.begin(), unique.begin() + (cap - 1), unique.end(),
                     by_key);
    unique.resize(cap);
    std::sort(unique.begin(), unique.end());
  }

  std::vector<AffineTerm> survivors;
  survivors.reserve(unique.size());
  for (std::size_t i : unique) {
    survivors.push_back(terms[i]);
  }
  return ValueExpansion(std::move(survivors), v.step_index());
}

}  // namespace minplus_attitude
