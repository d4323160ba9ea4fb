#include "minplus_attitude/simulation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace minplus_attitude {
namespace {

TEST(SampleDisturbance, ZeroScaleGivesZero) {
  std::mt19937_64 rng(51);
  const NoiseModel nm{NoiseKind::kGaussian, {1, 3, 5}, 0.0};
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(SampleDisturbance(nm, rng).IsZero());
  }
}

TEST(SampleDisturbance, GaussianMomentsAlongH1) {
  std::mt19937_64 rng(52);
  const double scale = 0.3;
  const NoiseModel nm{NoiseKind::kGaussian, {1}, scale};
  const int n = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const so3::Vector3 c = so3::Vee(SampleDisturbance(nm, rng));
    ASSERT_EQ(c.y(), 0.0);
    ASSERT_EQ(c.z(), 0.0);
    sum += c.x();
    sum_sq += c.x() * c.x();
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  EXPECT_LE(std::abs(mean), 3.0 * scale / std::sqrt(n));
  EXPECT_NEAR(var, scale * scale, 0.05 * scale * scale);
}

TEST(SampleDisturbance, UniformOnOppositeDirectionsStaysOnOneLine) {
  std::mt19937_64 rng(53);
  const NoiseModel nm{NoiseKind::kUniform, {1, 2}, 0.5};
  for (int i = 0; i < 1000; ++i) {
    const so3::Vector3 c = so3::Vee(SampleDisturbance(nm, rng));
    EXPECT_EQ(c.y(), 0.0);
    EXPECT_EQ(c.z(), 0.0);
    EXPECT_LE(std::abs(c.x()), 0.5);
  }
}

TEST(Simulate, StationaryWithoutDriftOrNoise) {
  ScenarioConfig cfg;
  cfg.steps = 20;
  const auto samples = Simulate(cfg);
  ASSERT_EQ(samples.size(), 20u);
  for (const SimSample& s : samples) {
    EXPECT_EQ(s.r_true.matrix(), so3::Matrix3::Identity());
    EXPECT_EQ(s.y.matrix(), s.r_true.matrix());
  }
}

TEST(Simulate, ConstantDriftComposes) {
  ScenarioConfig cfg;
  cfg.drift = so3::BasisElement(1);
  cfg.dt = 0.1;
  cfg.steps = 10;
  const auto samples = Simulate(cfg);
  EXPECT_NEAR(samples.back().t, 1.0, 1e-12);
  const so3::Matrix3 expected = so3::Expm(1.0 * so3::BasisElement(1)).matrix();
  EXPECT_LE((samples.back().r_true.matrix() - expected).cwiseAbs().maxCoeff(),
            1e-12);
  EXPECT_EQ(samples.back().drift, cfg.drift);
}

TEST(Simulate, SameSeedIsBitIdentical) {
  const ScenarioConfig cfg = ScenarioPreset("case3");
  const auto a = Simulate(cfg);
  const auto b = Simulate(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].r_true.matrix(), b[i].r_true.matrix());
    EXPECT_EQ(a[i].y.matrix(), b[i].y.matrix());
  }
  ScenarioConfig other = cfg;
  other.seed = cfg.seed + 1;
  EXPECT_NE(Simulate(other).back().y.matrix(), a.back().y.matrix());
}

TEST(Simulate, LongNoisyRunsKeepRotationInvariants) {
  ScenarioConfig cfg = ScenarioPreset("case4");
  cfg.steps = 5000;
  for (const SimSample& s : Simulate(cfg)) {
    ASSERT_NO_THROW(Rotation::FromMatrix(s.r_true.matrix()));
    ASSERT_NO_THROW(Rotation::FromMatrix(s.y.matrix()));
  }
}

TEST(Simulate, NoiseDirectionsAreRespected) {
  // case3: process noise on H3/H4 only, so with zero drift the truth never
  // leaves the H3 one-parameter subgroup.
  ScenarioConfig cfg = ScenarioPreset("case3");
  cfg.drift = AlgebraElement::Zero();
  cfg.measurement_noise.scale = 0.0;
  for (const SimSample& s : Simulate(cfg)) {
    EXPECT_NEAR(s.r_true.matrix()(0, 1), 0.0, 1e-12);
    EXPECT_NEAR(s.r_true.matrix()(1, 1), 1.0, 1e-12);
  }
}

TEST(Simulate, RejectsInvalidConfig) {
  ScenarioConfig cfg;
  cfg.dt = 0.0;
  EXPECT_THROW(Simulate(cfg), std::invalid_argument);
  cfg = ScenarioConfig{};
  cfg.steps = 0;
  EXPECT_THROW(Simulate(cfg), std::invalid_argument);
  cfg = ScenarioConfig{};
  cfg.process_noise.directions = {7};
  EXPECT_THROW(Simulate(cfg), std::invalid_argument);
}

TEST(ScenarioPreset, Case1HasZeroDrift) {
  const ScenarioConfig c = ScenarioPreset("case1");
  EXPECT_TRUE(c.drift.IsZero());
  EXPECT_EQ(c.process_noise.directions, std::vector<int>{1});
  EXPECT_EQ(c.measurement_noise.directions, std::vector<int>{1});
  EXPECT_TRUE(c.initial_estimate_error.IsZero());
}

TEST(ScenarioPreset, Case2DriftsAlongH1) {
  const ScenarioConfig c = ScenarioPreset("case2");
  EXPECT_EQ(c.drift, so3::BasisElement(1));
  EXPECT_EQ(c.process_noise.directions, std::vector<int>{1});
}

TEST(ScenarioPreset, Case3UsesOrthogonalDirections) {
  const ScenarioConfig c = ScenarioPreset("case3");
  EXPECT_EQ(c.drift, so3::BasisElement(1));
  EXPECT_EQ(c.process_noise.directions, (std::vector<int>{3, 4}));
  EXPECT_EQ(c.measurement_noise.directions, (std::vector<int>{1, 2}));

  const ScenarioConfig swapped = ScenarioPreset("case3", true);
  EXPECT_EQ(swapped.process_noise.directions, (std::vector<int>{1, 2}));
  EXPECT_EQ(swapped.measurement_noise.directions, (std::vector<int>{3, 4}));
}

TEST(ScenarioPreset, Case4AddsInitialError) {
  const ScenarioConfig c = ScenarioPreset("case4");
  EXPECT_FALSE(c.initial_estimate_error.IsZero());
  EXPECT_GT(so3::GeodesicAngle(Rotation(), InitialEstimate(c)), 0.1);
  EXPECT_EQ(c.process_noise.directions, (std::vector<int>{3, 4}));
}

TEST(ScenarioPreset, Case5IsUniformCase3) {
  const ScenarioConfig c = ScenarioPreset("case5-uniform");
  EXPECT_EQ(c.process_noise.kind, NoiseKind::kUniform);
  EXPECT_EQ(c.measurement_noise.kind, NoiseKind::kUniform);
  EXPECT_EQ(c.process_noise.directions, (std::vector<int>{3, 4}));
}

TEST(ScenarioPreset, UnknownNameThrows) {
  EXPECT_THROW(ScenarioPreset("case6"), std::invalid_argument);
  EXPECT_EQ(PresetNames().size(), 5u);
}

}  // namespace
}  // namespace minplus_attitude
