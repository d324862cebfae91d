// Copyright 2026 The qslkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles/reference.hpp"
#include "qslkit/qsl_metrics.hpp"
#include "qslkit/quadrature.hpp"

namespace qslkit {
namespace {

constexpr double kPi = std::numbers::pi;

// A qubit precessing about z from |+>: H = sigma_z/2, b(t) = (cos t, sin t, 0).
struct Precession {
  ComplexMatrix h = pauli::z() / 2.0;
  DensityMatrix rho0 = qubit_state(Eigen::Vector3d(1, 0, 0));
  DensityMatrix at(double t) const { return qubit_state(Eigen::Vector3d(std::cos(t), std::sin(t), 0)); }
};

TEST(Precession, ClosedFormPuritySpeedAndBound) {
  const Precession p;
  const Eigen::Vector3d b0(1, 0, 0), h(0, 0, 1);
  for (double t = 0; t < 2 * kPi; t += 0.3) {
    const DensityMatrix rho = p.at(t);
    EXPECT_NEAR(relative_purity(p.rho0, rho), (1 + std::cos(t)) / 2, 1e-15);
    EXPECT_NEAR(speed(p.rho0, p.h, rho), std::abs(std::sin(t)) / 2, 1e-15);
    EXPECT_NEAR(vqsl_qubit(SParameter::neg_inf(), b0, h, bloch_vector(rho)), 0.5, 1e-15);
    EXPECT_NEAR(vqsl_qubit(SParameter::of(0), b0, h, bloch_vector(rho)), std::sqrt(2.0) / 2, 1e-15);
  }
}

TEST(Precession, BoundSaturatesAtQuarterPeriod) {
  const Precession p;
  const auto f = structure_constants(su_generators(2));
  const RealVector b0 = Eigen::Vector3d(1, 0, 0), h = Eigen::Vector3d(0, 0, 1);
  EXPECT_NEAR(tightness_residual(b0, h, bloch_vector(p.at(kPi / 2)), f), 0, 1e-15);
  EXPECT_GT(tightness_residual(b0, h, bloch_vector(p.at(kPi / 4)), f), 0.2);
  // b parallel to h leaves no rotation direction at all.
  EXPECT_EQ(tightness_residual(b0, h, RealVector(Eigen::Vector3d(0, 0, 0.5)), f), kResidualUndefined);
}

TEST(Precession, MetricsSeriesLocatesQuarterPeriod) {
  const Precession p;
  Trajectory traj;
  for (int i = 0; i <= 200; ++i) {
    const double t = kPi * i / 200;
    traj.times.push_back(t);
    traj.states.push_back(p.at(t));
  }
  const MetricsSeries m = compute_metrics(traj, [&](double) { return p.h; }, {}, {SParameter::neg_inf()});
  const std::vector<double> tight = locate_tightness(m);
  ASSERT_EQ(tight.size(), 1u);
  EXPECT_NEAR(tight[0], kPi / 2, 1e-12);
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_LE(m.speed[i], m.vqsl_for(SParameter::neg_inf())[i] + 1e-15);
    EXPECT_FALSE(m.cost_rate[i].has_value());
    EXPECT_FALSE(m.ratio[i].has_value());
  }
  EXPECT_THROW(m.vqsl_for(SParameter::of(0)), InvalidArgument);
}

TEST(Bound, SpeedIsHalfTripleProduct) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const Eigen::Vector3d b0 = oracle::random_bloch(rng), b = oracle::random_bloch(rng);
    const oracle::Mat hm = oracle::random_hermitian(rng, 2);
    const Eigen::Vector3d h = bloch_vector(hm);
    const double v = speed(qubit_state(b0), hm, qubit_state(b));
    EXPECT_NEAR(v, 0.5 * std::abs(b0.dot(h.cross(b))), 1e-13);
  }
}

TEST(Bound, HoldsForRandomStatesAndIsMonotoneInS) {
  std::mt19937_64 rng(32);
  const std::vector<SParameter> ss = {SParameter::neg_inf(), SParameter::of(-3), SParameter::of(-1),
                                      SParameter::of(0), SParameter::of(1), SParameter::of(2.5)};
  for (int k = 0; k < 200; ++k) {
    const Eigen::Vector3d b0 = oracle::random_bloch(rng), b = oracle::random_bloch(rng);
    const oracle::Mat hm = oracle::random_hermitian(rng, 2);
    const Eigen::Vector3d h = bloch_vector(hm);
    const double v = speed(qubit_state(b0), hm, qubit_state(b));
    double previous = 0;
    for (const SParameter& s : ss) {
      const double bound = vqsl_qubit(s, b0, h, b);
      EXPECT_LE(v, bound + 1e-13);
      EXPECT_GE(bound, previous - 1e-15);
      previous = bound;
    }
  }
}

TEST(Bound, TradeoffRatio) {
  EXPECT_NEAR(tradeoff_ratio(SParameter::neg_inf()), 1 / std::sqrt(2.0), 1e-16);
  EXPECT_NEAR(tradeoff_ratio(SParameter::of(0)), 1, 1e-15);
  EXPECT_NEAR(tradeoff_ratio(SParameter::of(1)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(tradeoff_ratio(SParameter::of(-40)), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Bound, EigenstateFormUsesMixingAngleRate) {
  const double omega0 = 2 * kPi * 0.04;
  const LZParams lz(omega0 / 4, ControlSchedule::cosine(omega0, 50));
  for (double t : {5.0, 25.0, 45.0}) {
    const double rate = std::abs(counterdiabatic_coefficient(lz, t));
    EXPECT_NEAR(cost_rate(lz, t), std::sqrt(2.0) * rate, 1e-15);
    EXPECT_NEAR(vqsl_eigenstate(SParameter::of(1), lz, t), 2 * rate, 1e-15);
    EXPECT_NEAR(vqsl_eigenstate(SParameter::neg_inf(), lz, t) / cost_rate(lz, t),
                tradeoff_ratio(SParameter::neg_inf()), 1e-14);
  }
}

TEST(Oracles, PhaseSpacePurityEqualsTrace) {
  std::mt19937_64 rng(33);
  for (double s : {-2.0, -0.5, 0.0, 0.7, 2.0}) {
    const DensityMatrix a = qubit_state(oracle::random_bloch(rng));
    const DensityMatrix b = qubit_state(oracle::random_bloch(rng));
    EXPECT_NEAR(phase_space_purity_oracle(a, b, SParameter::of(s), 16), relative_purity(a, b), 1e-13) << s;
  }
}

TEST(Oracles, QuadratureBoundEqualsClosedForm) {
  std::mt19937_64 rng(34);
  for (double s : {-3.0, -1.0, 0.0, 1.5}) {
    const Eigen::Vector3d b0 = oracle::random_bloch(rng), b = oracle::random_bloch(rng);
    const oracle::Mat hm = oracle::random_hermitian(rng, 2);
    const double closed = vqsl_qubit(SParameter::of(s), b0, bloch_vector(hm), b);
    const double quad = vqsl_quadrature_oracle(qubit_state(b0), hm, qubit_state(b), SParameter::of(s), 16);
    EXPECT_NEAR(quad, closed, 1e-12 * std::max(1.0, closed)) << s;
  }
}

TEST(PriorArt, SingularAnglesAreUndefined) {
  EXPECT_FALSE(prior_vqsl_value(1, 1, 0).has_value());
  EXPECT_FALSE(prior_vqsl_value(1, 1, kPi / 2).has_value());
  ASSERT_TRUE(prior_vqsl_value(3, 4, kPi / 4).has_value());
  EXPECT_NEAR(*prior_vqsl_value(3, 4, kPi / 4), 10, 1e-13);
}

TEST(PriorArt, BoundsAngleRateOnTransitionlessTrajectory) {
  const double omega0 = 2 * kPi * 0.04;
  const LZParams lz(omega0 / 4, ControlSchedule::cosine(omega0, 50));
  const Trajectory traj =
      propagate_unitary([&](double t) { return transitionless_hamiltonian(lz, t); },
                        DensityMatrix::from_pure(instantaneous_eigensystem(lz, 0).psi_plus), TimeGrid{0, 50, 501, 4});
  const PriorQsl prior = prior_vqsl(lz, traj);
  ASSERT_EQ(prior.v_qsl.size(), traj.size());
  EXPECT_FALSE(prior.v_qsl.front().has_value());
  for (std::size_t i = 1; i + 1 < prior.times.size(); ++i) {
    if (prior.v_qsl[i] && prior.angle_rate[i]) {
      EXPECT_LE(*prior.angle_rate[i], *prior.v_qsl[i]);
    }
  }
}

TEST(PriorArt, RejectsMixedTrajectories) {
  const double omega0 = 2 * kPi * 0.04;
  const LZParams lz(omega0 / 4, ControlSchedule::cosine(omega0, 50));
  Trajectory traj;
  traj.times = {0, 1};
  traj.states = {DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(2)};
  EXPECT_THROW(prior_vqsl(lz, traj), InvalidArgument);
}

TEST(Quadrature, GaussLegendreIntegratesPolynomialsExactly) {
  const GaussLegendre gl = gauss_legendre(6);
  EXPECT_NEAR(gl.weights.sum(), 2, 1e-14);
  for (int p = 0; p <= 11; ++p) {
    double acc = 0;
    for (int i = 0; i < 6; ++i) acc += gl.weights(i) * std::pow(gl.nodes(i), p);
    const double want = p % 2 ? 0.0 : 2.0 / (p + 1);
    EXPECT_NEAR(acc, want, 1e-14) << p;
  }
  for (int i = 1; i < 6; ++i) EXPECT_LT(gl.nodes(i - 1), gl.nodes(i));
  EXPECT_THROW(gauss_legendre(0), InvalidArgument);
}

TEST(Quadrature, SphereRuleMoments) {
  const SphereRule rule = sphere_rule(8, 16);
  double area = 0, zz = 0, xy = 0, x4 = 0;
  for (std::size_t k = 0; k < rule.points.size(); ++k) {
    const Eigen::Vector3d& n = rule.points[k];
    EXPECT_NEAR(n.norm(), 1, 1e-15);
    area += rule.weights[k];
    zz += rule.weights[k] * n.z() * n.z();
    xy += rule.weights[k] * n.x() * n.y();
    x4 += rule.weights[k] * std::pow(n.x(), 4);
  }
  EXPECT_NEAR(area, 4 * kPi, 1e-13);
  EXPECT_NEAR(zz, 4 * kPi / 3, 1e-13);
  EXPECT_NEAR(xy, 0, 1e-13);
  EXPECT_NEAR(x4, 4 * kPi / 5, 1e-13);
}

TEST(SParameterTest, ParseLabelAndOrder) {
  EXPECT_TRUE(SParameter::parse("-inf").is_neg_inf());
  EXPECT_TRUE(SParameter::parse("neginf").is_neg_inf());
  EXPECT_DOUBLE_EQ(SParameter::parse("-1.5").value(), -1.5);
  EXPECT_EQ(SParameter::of(0.5).label(), "0.5");
  EXPECT_EQ(SParameter::neg_inf().label(), "neginf");
  EXPECT_LT(SParameter::neg_inf(), SParameter::of(-600));
  EXPECT_EQ(SParameter::neg_inf().pow3(), 0.0);
  EXPECT_NEAR(SParameter::of(2).pow3(), 9, 1e-14);
  EXPECT_THROW(SParameter::parse("abc"), InvalidArgument);
  EXPECT_THROW(SParameter::of(601), InvalidArgument);
  EXPECT_THROW(SParameter::of(std::numeric_limits<double>::infinity()), InvalidArgument);
}

}  // namespace
}  // namespace qslkit
