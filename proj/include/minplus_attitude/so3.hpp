#pragma once

// Rotation-group and Lie-algebra primitives on SO(3).
//
// Coordinates on so(3) use the basis (H1, H3, H5):
//
//   H1 = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
//   H3 = [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
//   H5 = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
//
// with H2 = -H1, H4 = -H3, H6 = -H5.

#include <random>

#include <Eigen/Dense>

namespace minplus_attitude::so3 {

using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;

inline constexpr double kSkewTolerance = 1e-12;
inline constexpr double kRotationTolerance = 1e-9;

/// A 3x3 skew-symmetric matrix.
class AlgebraElement {
 public:
  AlgebraElement() : mat_(Matrix3::Zero()) {}

  /// Throws std::invalid_argument unless `m + m^T = 0` entrywise within
  /// kSkewTolerance.
  static AlgebraElement FromMatrix(const Matrix3& m);
  static AlgebraElement Zero() { return AlgebraElement(); }

  const Matrix3& matrix() const { return mat_; }
  bool IsZero() const { return mat_.isZero(0.0); }

  AlgebraElement operator+(const AlgebraElement& other) const {
    return AlgebraElement(mat_ + other.mat_);
  }
  AlgebraElement operator-(const AlgebraElement& other) const {
    return AlgebraElement(mat_ - other.mat_);
  }
  AlgebraElement operator-() const { return AlgebraElement(-mat_); }
  AlgebraElement operator*(double s) const { return AlgebraElement(s * mat_); }
  friend AlgebraElement operator*(double s, const AlgebraElement& a) {
    return a * s;
  }

  bool operator==(const AlgebraElement& other) const {
    return mat_ == other.mat_;
  }

 private:
  explicit AlgebraElement(const Matrix3& m) : mat_(m) {}
  Matrix3 mat_;

  friend AlgebraElement Hat(const Vector3& v);
};

struct ProcrustesResult;

/// A 3x3 special orthogonal matrix.
class Rotation {
 public:
  Rotation() : mat_(Matrix3::Identity()) {}

  /// Throws std::invalid_argument unless `m^T m = I` and `det m = 1` within
  /// kRotationTolerance.
  static Rotation FromMatrix(const Matrix3& m);
  static Rotation Identity() { return Rotation(); }

  const Matrix3& matrix() const { return mat_; }
  Rotation transpose() const { return Rotation(mat_.transpose()); }

  /// Group product. Re-projected onto SO(3) when the orthogonality defect of
  /// the raw product exceeds kRotationTolerance.
  Rotation operator*(const Rotation& other) const;

  /// Largest entrywise deviation of `m^T m` from the identity.
  static double OrthogonalityDefect(const Matrix3& m);

 private:
  explicit Rotation(const Matrix3& m) : mat_(m) {}
  Matrix3 mat_;

  friend Rotation Expm(const AlgebraElement& a);
  friend Rotation ProjectSO3(const Matrix3& m);
  friend ProcrustesResult ProcrustesMax(const Matrix3& m);
  friend Rotation SampleHaar(std::mt19937_64& rng);
};

/// H_i for i in 1..6. Throws std::invalid_argument otherwise.
AlgebraElement BasisElement(int i);

/// v.x * H1 + v.y * H3 + v.z * H5.
AlgebraElement Hat(const Vector3& v);

/// Inverse of Hat.
Vector3 Vee(const AlgebraElement& a);

/// Vee on a raw matrix; throws std::invalid_argument if `m` is not
/// skew-symmetric within kSkewTolerance.
Vector3 Vee(const Matrix3& m);

/// Closed-form (Rodrigues) exponential of a skew-symmetric matrix.
Rotation Expm(const AlgebraElement& a);

/// Nearest rotation to `m` in the Frobenius norm. Throws std::domain_error if
/// `m` is numerically singular.
Rotation ProjectSO3(const Matrix3& m);

struct ProcrustesResult {
  Rotation rotation;
  double value = 0.0;
};

/// Maximizes tr(m * R) over R in SO(3).
///
/// With m = U S V^T, the maximizer is V diag(1, 1, d) U^T where
/// d = det(U V^T), and the maximum is s1 + s2 + d * s3. When m is rank
/// deficient the maximizer is not unique; one valid maximizer is returned.
ProcrustesResult ProcrustesMax(const Matrix3& m);

/// Rotation angle of a^T b, in [0, pi].
double GeodesicAngle(const Rotation& a, const Rotation& b);

/// Haar-uniform rotation from a normalized Gaussian quaternion.
Rotation SampleHaar(std::mt19937_64& rng);

}  // namespace minplus_attitude::so3
