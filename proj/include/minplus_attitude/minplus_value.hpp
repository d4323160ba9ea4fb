#pragma once

// Min-plus expansion of the attitude filtering value function.
//
// The value function at step k is held as a finite min-plus sum of affine
// terms in the (matrix-embedded) rotation:
//
//   V_k(R) = min_i [ c_i - 1/2 tr(M_i R) ]
//
// One dynamic-programming step against a finite disturbance set maps every
// term to |Z| new terms, so the family stays closed under propagation.

#include <cstddef>
#include <vector>

#include "minplus_attitude/so3.hpp"

namespace minplus_attitude {

using so3::AlgebraElement;
using so3::Matrix3;
using so3::Rotation;

/// The function R -> offset - 1/2 tr(coefficient * R).
struct AffineTerm {
  double offset = 0.0;
  Matrix3 coefficient = Matrix3::Zero();

  double Evaluate(const Rotation& r) const {
    return offset - 0.5 * (coefficient * r.matrix()).trace();
  }
};

/// Finite min-plus combination of affine terms. Never empty.
class ValueExpansion {
 public:
  /// Throws std::invalid_argument if `terms` is empty or holds non-finite
  /// entries.
  ValueExpansion(std::vector<AffineTerm> terms, int step_index);

  const std::vector<AffineTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int step_index() const { return step_index_; }

  /// Pointwise minimum over the terms.
  double Evaluate(const Rotation& r) const;

 private:
  std::vector<AffineTerm> terms_;
  int step_index_ = 0;
};

/// Discretized, bounded disturbance set. Always contains zero, so data that
/// the drift alone explains costs nothing.
class DisturbanceSet {
 public:
  explicit DisturbanceSet(std::vector<AlgebraElement> elements);

  /// {0} together with m * H_i for every magnitude m and i in 1..6, in that
  /// order (magnitude-major).
  static DisturbanceSet FromMagnitudes(const std::vector<double>& magnitudes);

  const std::vector<AlgebraElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<AlgebraElement> elements_;
};

/// Initial-estimate weight K^-1 and measurement weight L^-1; both symmetric
/// positive definite.
class Weights {
 public:
  Weights() : k_inv_(Matrix3::Identity()), l_inv_(Matrix3::Identity()) {}
  Weights(const Matrix3& k_inv, const Matrix3& l_inv);

  const Matrix3& k_inv() const { return k_inv_; }
  const Matrix3& l_inv() const { return l_inv_; }

 private:
  Matrix3 k_inv_;
  Matrix3 l_inv_;
};

/// Terminal cost 1/4 phi_{K^-1}(R R0^T) for prior estimate R0, as a single
/// term (1/2 tr K^-1, R0^T K^-1).
ValueExpansion InitialExpansion(const Weights& weights, const Rotation& r_hat0);

/// Backward transition over one step: expm(-(drift + disturbance) * dt).
Rotation BackwardTransition(const AlgebraElement& drift,
                            const AlgebraElement& disturbance, double dt);

/// One dynamic-programming step with measurement `y` and drift `drift`.
///
/// Output term (i, j), stored at index i * |Z| + j, is
///   offset = c_i + 1/2 tr(z_j^T z_j) dt + 1/2 tr(L^-1) dt
///   coeff  = L^-T y^T dt + Psi(drift, z_j) M_i.
/// Throws std::invalid_argument if dt <= 0.
ValueExpansion Propagate(const ValueExpansion& v, const Rotation& y,
                         const AlgebraElement& drift, double dt,
                         const DisturbanceSet& zset, const Weights& weights);

struct Minimizer {
  Rotation rotation;
  double value = 0.0;
};

/// Exact minimum of a single term over SO(3).
Minimizer TermMin(const AffineTerm& t);

/// Global minimizer of the expansion: the best of the per-term minima.
/// Ties go to the lowest term index.
Minimizer ExtractEstimate(const ValueExpansion& v);

/// Keeps at most `cap` terms.
///
/// Expansions with at most `cap` terms are returned unchanged. Otherwise
/// duplicates (offset and coefficient equal within 1e-10 entrywise) are
/// dropped, keeping the first, and the `cap` terms with the smallest TermMin
/// value survive in their original relative order. Removing terms can only
/// raise the pointwise minimum. Throws std::invalid_argument if cap < 1.
ValueExpansion Prune(const ValueExpansion& v, std::size_t cap);

}  // namespace minplus_attitude
