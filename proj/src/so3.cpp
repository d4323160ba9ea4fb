#include "minplus_attitude/so3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Geometry>
#include <Eigen/SVD>

namespace minplus_attitude::so3 {

namespace {

// Below this angle the Rodrigues coefficients switch to their Taylor series.
constexpr double kSmallAngle = 1e-8;

}  // namespace

AlgebraElement AlgebraElement::FromMatrix(const Matrix3& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("algebra element has non-finite entries");
  }
  const double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSkewTolerance) {
    throw std::invalid_argument("matrix is not skew-symmetric (|m + m^T| = " +
                                std::to_string(asym) + ")");
  }
  return AlgebraElement(m);
}

double Rotation::OrthogonalityDefect(const Matrix3& m) {
  return (m.transpose() * m - Matrix3::Identity()).cwiseAbs().maxCoeff();
}

Rotation Rotation::FromMatrix(const Matrix3& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("rotation has non-finite entries");
  }
  if (OrthogonalityDefect(m) > kRotationTolerance) {
    throw std::invalid_argument("matrix is not orthogonal");
  }
  if (std::abs(m.determinant() - 1.0) > kRotationTolerance) {
    throw std::invalid_argument("matrix determinant is not +1");
  }
  return Rotation(m);
}

Rotation Rotation::operator*(const Rotation& other) const {
  Matrix3 product = mat_ * other.mat_;
  if (OrthogonalityDefect(product) > kRotationTolerance) {
    return ProjectSO3(product);
  }
  return Rotation(product);
}

AlgebraElement BasisElement(int i) {
  switch (i) {
    case 1: return Hat(Vector3(1.0, 0.0, 0.0));
    case 2: return -Hat(Vector3(1.0, 0.0, 0.0));
    case 3: return Hat(Vector3(0.0, 1.0, 0.0));
    case 4: return -Hat(Vector3(0.0, 1.0, 0.0));
    case 5: return Hat(Vector3(0.0, 0.0, 1.0));
    case 6: return -Hat(Vector3(0.0, 0.0, 1.0));
    default:
      throw std::invalid_argument("basis index must be in 1..6, got " +
                                  std::to_string(i));
  }
}

AlgebraElement Hat(const Vector3& v) {
  Matrix3 m;
  // clang-format off
  m <<  0.0,    v.x(),  v.y(),
       -v.x(),  0.0,    v.z(),
       -v.y(), -v.z(),  0.0;
  // clang-format on
  return AlgebraElement(m);
}

Vector3 Vee(const AlgebraElement& a) {
  const Matrix3& m = a.matrix();
  return Vector3(m(0, 1), m(0, 2), m(1, 2));
}

Vector3 Vee(const Matrix3& m) {
  return Vee(AlgebraElement::FromMatrix(m));
}

Rotation Expm(const AlgebraElement& a) {
  const Matrix3& k = a.matrix();
  const double theta = Vee(a).norm();
  const Matrix3 k2 = k * k;

  // exp(a) = I + (sin t / t) a + ((1 - cos t) / t^2) a^2
  double s;
  double c;
  if (theta < kSmallAngle) {
    const double t2 = theta * theta;
    s = 1.0 - t2 / 6.0;
    c = 0.5 - t2 / 24.0;
  } else {
    s = std::sin(theta) / theta;
    c = (1.0 - std::cos(theta)) / (theta * theta);
  }
  return Rotation(Matrix3::Identity() + s * k + c * k2);
}

ProcrustesResult ProcrustesMax(const Matrix3& m) {
  const Eigen::JacobiSVD<Matrix3> svd(m, Eigen::ComputeFullU |
                                             Eigen::ComputeFullV);
  const Matrix3& u = svd.matrixU();
  const Matrix3& v = svd.matrixV();
  const Vector3& sigma = svd.singularValues();

  const double d = (u.determinant() * v.determinant() < 0.0) ? -1.0 : 1.0;
  Matrix3 correction = Matrix3::Identity();
  correction(2, 2) = d;

  ProcrustesResult result;
  result.rotation = Rotation(v * correction * u.transpose());
  result.value = sigma(0) + sigma(1) + d * sigma(2);
  return result;
}

Rotation ProjectSO3(const Matrix3& m) {
  if (!m.allFinite()) {
    throw std::domain_error("cannot project a non-finite matrix");
  }
  const Eigen::JacobiSVD<Matrix3> svd(m);
  const Vector3& sigma = svd.singularValues();
  if (!(sigma(2) > 1e-12 * std::max(sigma(0), 1.0))) {
    throw std::domain_error("cannot project a singular matrix onto SO(3)");
  }
  return ProcrustesMax(m.transpose()).rotation;
}

double GeodesicAngle(const Rotation& a, const Rotation& b) {
  const double cos_angle =
      ((a.matrix().transpose() * b.matrix()).trace() - 1.0) / 2.0;
  return std::acos(std::clamp(cos_angle, -1.0, 1.0));
}

Rotation SampleHaar(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond q;
  do {
    q = Eigen::Quaterniond(normal(rng), normal(rng), normal(rng), normal(rng));
  } while (q.norm() < 1e-12);
  q.normalize();
  return Rotation(q.toRotationMatrix());
}

}  // namespace minplus_attitude::so3
