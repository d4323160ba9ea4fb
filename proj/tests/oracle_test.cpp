#include "minplus_attitude/oracle.hpp"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "minplus_attitude/metrics.hpp"
#include "test_util.hpp"

namespace minplus_attitude::oracle {
namespace {

using testing::HaarSamples;
using testing::RandomAlgebra;
using testing::RandomTerm;
using testing::ThreeElementSet;

std::vector<Observation> RandomHistory(std::mt19937_64& rng, int steps) {
  std::vector<Observation> h;
  for (int k = 0; k < steps; ++k) {
    h.push_back({so3::SampleHaar(rng), RandomAlgebra(rng, 1.0)});
  }
  return h;
}

TEST(BruteForceValue, NoStepsIsTerminalCost) {
  std::mt19937_64 rng(71);
  const FilterConfig cfg;
  const Rotation r_hat0 = so3::SampleHaar(rng);
  const ValueExpansion v0 = InitialExpansion(cfg.weights, r_hat0);
  for (const Rotation& r : HaarSamples(rng, 50)) {
    EXPECT_NEAR(BruteForceValue(r, {}, cfg, r_hat0), v0.Evaluate(r), 1e-12);
  }
}

TEST(BruteForceValue, SingleSequenceIsPlainSum) {
  std::mt19937_64 rng(72);
  FilterConfig cfg;
  cfg.zset = DisturbanceSet({AlgebraElement::Zero()});
  const Rotation r_hat0 = so3::SampleHaar(rng);
  const std::vector<Observation> h = RandomHistory(rng, 1);
  const Rotation r = so3::SampleHaar(rng);

  const Rotation earlier = r * so3::Expm(h[0].drift * (-cfg.dt));
  const double expected =
      QuarterPenalty(Matrix3::Identity(), r.matrix().transpose() * h[0].y.matrix()) *
          cfg.dt +
      QuarterPenalty(Matrix3::Identity(),
                     earlier.matrix() * r_hat0.matrix().transpose());
  EXPECT_NEAR(BruteForceValue(r, h, cfg, r_hat0), expected, 1e-12);
}

TEST(BruteForceValue, MonotoneInDisturbanceSet) {
  std::mt19937_64 rng(73);
  FilterConfig small;
  small.zset = DisturbanceSet({AlgebraElement::Zero(), 0.5 * so3::BasisElement(1)});
  FilterConfig large = small;
  large.zset = ThreeElementSet(0.5, 1, 5);
  const Rotation r_hat0 = so3::SampleHaar(rng);
  const std::vector<Observation> h = RandomHistory(rng, 3);
  for (const Rotation& r : HaarSamples(rng, 50)) {
    EXPECT_LE(BruteForceValue(r, h, large, r_hat0),
              BruteForceValue(r, h, small, r_hat0) + 1e-15);
  }
}

TEST(BruteForceValue, GuardRejectsHugeEnumerations) {
  std::mt19937_64 rng(74);
  const FilterConfig cfg;  // 13 disturbances; 13^6 > 1e6
  const std::vector<Observation> h = RandomHistory(rng, 6);
  EXPECT_THROW(BruteForceValue(Rotation(), h, cfg, Rotation()),
               std::invalid_argument);
  EXPECT_NO_THROW(
      BruteForceValue(Rotation(), RandomHistory(rng, 2), cfg, Rotation()));
}

TEST(GridMin, TrackingErrorFindsTarget) {
  std::mt19937_64 rng(75);
  const Rotation q = so3::SampleHaar(rng);
  const RotationFunction f = [&](const Rotation& r) { return TrackingError(r, q); };
  const GridResult raw = GridSampleMin(f, 100000, 76);
  EXPECT_LE(raw.value, 0.01);
  EXPECT_LE(so3::GeodesicAngle(raw.rotation, q), 0.1);
  const GridResult refined = GridMinSO3(f, 100000, 76);
  EXPECT_LE(refined.value, raw.value);
  EXPECT_LE(so3::GeodesicAngle(refined.rotation, q), 1e-6);
}

TEST(GridMin, ConstantFunction) {
  const RotationFunction f = [](const Rotation&) { return 2.5; };
  EXPECT_EQ(GridSampleMin(f, 10).value, 2.5);
  EXPECT_EQ(GridMinSO3(f, 10).value, 2.5);
  EXPECT_THROW(GridSampleMin(f, 0), std::invalid_argument);
}

TEST(GridMin, AgreesWithTermMinAndBoundsItFromAbove) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const AffineTerm t = RandomTerm(rng);
    const RotationFunction f = [&](const Rotation& r) { return t.Evaluate(r); };
    const Minimizer exact = TermMin(t);
    const GridResult raw = GridSampleMin(f, 20000, trial);
    const GridResult refined = GridMinSO3(f, 20000, trial);
    EXPECT_GE(raw.value, exact.value - 1e-12);
    EXPECT_GE(refined.value, exact.value - 1e-12);
    EXPECT_NEAR(refined.value, exact.value, 1e-9);
  }
}

TEST(GridMin, SampleMinIsNonIncreasingInN) {
  std::mt19937_64 rng(78);
  const AffineTerm t = RandomTerm(rng);
  const RotationFunction f = [&](const Rotation& r) { return t.Evaluate(r); };
  double previous = GridSampleMin(f, 1, 5).value;
  for (std::size_t n : {10u, 100u, 1000u, 10000u}) {
    const double value = GridSampleMin(f, n, 5).value;
    EXPECT_LE(value, previous);
    previous = value;
  }
}

}  // namespace
}  // namespace minplus_attitude::oracle
