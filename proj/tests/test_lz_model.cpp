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
#include <sstream>

#include "qslkit/dynamics.hpp"
#include "qslkit/io.hpp"
#include "qslkit/lz_model.hpp"

namespace qslkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOmega0 = 2 * kPi * 0.04;

LZParams cosine_model(double tau = 50) { return LZParams(kOmega0 / 4, ControlSchedule::cosine(kOmega0, tau)); }

TEST(ControlSchedule, CosineValuesAndDerivative) {
  const ControlSchedule s = ControlSchedule::cosine(kOmega0, 50);
  EXPECT_NEAR(s.eval(0).g, kOmega0 / 2, 1e-15);
  EXPECT_NEAR(s.eval(25).g, 0, 1e-15);
  EXPECT_NEAR(s.eval(50).g, -kOmega0 / 2, 1e-15);
  for (double t : {3.0, 17.0, 41.5}) {
    const double fd = (s.eval(t + 1e-5).g - s.eval(t - 1e-5).g) / 2e-5;
    EXPECT_NEAR(s.eval(t).gprime, fd, 1e-9);
  }
}

TEST(ControlSchedule, LinearRamp) {
  const ControlSchedule s = ControlSchedule::linear(0.2, 0.4, 1000);
  EXPECT_NEAR(s.eval(0).g, 0.2, 1e-15);
  EXPECT_NEAR(s.eval(500).g, 0.0, 1e-15);
  EXPECT_NEAR(s.eval(1000).g, -0.2, 1e-15);
  EXPECT_NEAR(s.eval(123).gprime, -0.4 / 1000, 1e-18);
}

TEST(ControlSchedule, TableInterpolates) {
  const ControlSchedule s = ControlSchedule::table({0, 1, 3}, {0, 2, -2});
  EXPECT_NEAR(s.eval(0.5).g, 1, 1e-15);
  EXPECT_NEAR(s.eval(2).g, 0, 1e-15);
  EXPECT_NEAR(s.eval(2).gprime, -2, 1e-15);
  EXPECT_NEAR(s.eval(1).gprime, -2, 1e-15);  // right segment at a knot
  EXPECT_THROW(ControlSchedule::table({0.5, 1}, {0, 1}), InvalidArgument);
  EXPECT_THROW(ControlSchedule::table({0, 1, 1}, {0, 1, 2}), InvalidArgument);
}

TEST(ControlSchedule, RejectsBadInput) {
  EXPECT_THROW(ControlSchedule::cosine(kOmega0, -1), InvalidArgument);
  EXPECT_THROW(ControlSchedule::cosine(kOmega0, 50).eval(50.1), RangeError);
  EXPECT_THROW(ControlSchedule::cosine(kOmega0, 50).eval(-0.1), RangeError);
}

TEST(LZModel, EigenvectorsSatisfyEigenEquation) {
  const LZParams lz = cosine_model();
  for (double t = 0; t <= 50; t += 2.5) {
    const Eigensystem es = instantaneous_eigensystem(lz, t);
    const ComplexMatrix h = h0(lz, t);
    EXPECT_LT((h * es.psi_plus - es.energy * es.psi_plus).norm(), 1e-14) << t;
    EXPECT_LT((h * es.psi_minus + es.energy * es.psi_minus).norm(), 1e-14) << t;
    EXPECT_NEAR(es.psi_plus.norm(), 1, 1e-15);
    EXPECT_NEAR(std::abs(es.psi_plus.dot(es.psi_minus)), 0, 1e-15);
    EXPECT_NEAR(es.energy, std::hypot(lz.delta, lz.schedule.eval(t).g), 1e-15);
  }
}

TEST(LZModel, MixingAngleEndpointsAndMidpoint) {
  const LZParams lz = cosine_model();
  // g(0) = 2 Delta so tan(2 theta) = 1/2; g(tau/2) = 0 gives theta = pi/4.
  EXPECT_NEAR(instantaneous_eigensystem(lz, 0).theta, std::atan(0.5) / 2, 1e-15);
  EXPECT_NEAR(instantaneous_eigensystem(lz, 25).theta, kPi / 4, 1e-15);
  EXPECT_NEAR(instantaneous_eigensystem(lz, 50).theta, (kPi - std::atan(0.5)) / 2, 1e-15);
}

TEST(LZModel, CounterdiabaticCoefficientIsMixingAngleRate) {
  for (const LZParams& lz : {cosine_model(), LZParams(0.01, ControlSchedule::linear(0.2, 0.4, 1000))}) {
    const double tau = lz.tau();
    for (int k = 1; k < 20; ++k) {
      const double t = tau * k / 20.0;
      const double eps = tau * 1e-6;
      const double fd = (instantaneous_eigensystem(lz, t + eps).theta - instantaneous_eigensystem(lz, t - eps).theta) /
                        (2 * eps);
      const double xi = counterdiabatic_coefficient(lz, t);
      EXPECT_NEAR(xi, fd, 1e-7 * std::max(1.0, std::abs(xi)));
      EXPECT_NEAR(xi, mixing_angle_rate(lz, t), 1e-14);
    }
  }
}

TEST(LZModel, TransitionlessHamiltonianAddsSigmaY) {
  const LZParams lz = cosine_model();
  const double t = 13.0;
  const ComplexMatrix h = transitionless_hamiltonian(lz, t);
  const double xi = counterdiabatic_coefficient(lz, t);
  const ComplexMatrix want = pauli::combine(0.0, lz.delta, xi, lz.schedule.eval(t).g);
  EXPECT_LT((h - want).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((counterdiabatic_h1(lz, t) - xi * pauli::y()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(LZModel, EffectiveControlsReproduceHamiltonian) {
  const LZParams lz = cosine_model();
  for (double t : {0.0, 11.0, 25.0, 49.0}) {
    const EffectiveControls c = effective_controls(lz, t);
    EXPECT_LT((c.hamiltonian() - transitionless_hamiltonian(lz, t)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(c.omega_eff, std::hypot(lz.delta, c.xi), 1e-15);
  }
}

TEST(LZModel, TransitionlessDrivingTracksEigenstate) {
  const LZParams lz = cosine_model();
  const TimeGrid grid{0, 50, 201, 8};
  const Trajectory traj = propagate_unitary([&](double t) { return transitionless_hamiltonian(lz, t); },
                                            DensityMatrix::from_pure(instantaneous_eigensystem(lz, 0).psi_plus), grid);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const ComplexVector psi = instantaneous_eigensystem(lz, traj.times[i]).psi_plus;
    const double pop = std::real(psi.dot(traj.states[i].matrix() * psi));
    EXPECT_NEAR(pop, 1, 1e-9) << traj.times[i];
  }
}

TEST(LZModel, DiscretizedPulsesConvergeToContinuousDrive) {
  const LZParams lz = cosine_model();
  const DensityMatrix rho0 = DensityMatrix::from_pure(instantaneous_eigensystem(lz, 0).psi_plus);
  const ComplexVector target = instantaneous_eigensystem(lz, 50).psi_plus;
  double previous = 1;
  for (int n : {25, 50, 100, 200}) {
    const PulseSequence seq = discretize(lz, n);
    ASSERT_EQ(int(seq.steps.size()), n);
    EXPECT_NEAR(seq.total_duration(), 50, 1e-12);
    const DensityMatrix out = propagate_pulse_sequence(seq, rho0).states.back();
    const double infidelity = 1 - std::real(target.dot(out.matrix() * target));
    EXPECT_LT(infidelity, previous);
    previous = infidelity;
  }
  EXPECT_LT(previous, 1e-5);
}

TEST(LZModel, PulseCsvHeaderAndRows) {
  std::ostringstream os;
  write_pulse_csv(os, discretize(cosine_model(), 4));
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header, "step_index,duration_us,omega_eff_rad_per_us,phase_eff_rad,detuning_rad_per_us");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(LZModel, WorkedExamples) {
  const LZParams lz = cosine_model();
  const RealVector e = hermitian_eigenvalues(h0(lz, 0));
  EXPECT_NEAR(e(1), kOmega0 * std::sqrt(5.0) / 4, 1e-15);
  EXPECT_NEAR(e(0), -kOmega0 * std::sqrt(5.0) / 4, 1e-15);

  const LZParams flat_z(0, ControlSchedule::table({0, 1}, {1, 1}));
  EXPECT_LT((h0(flat_z, 0.5) - pauli::z()).cwiseAbs().maxCoeff(), 1e-15);
  const LZParams flat_x(1, ControlSchedule::table({0, 1}, {0, 0}));
  EXPECT_LT((h0(flat_x, 0.5) - pauli::x()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(instantaneous_eigensystem(flat_x, 0.5).theta, kPi / 4, 1e-15);

  const LZParams small(0.01, ControlSchedule::table({0, 1}, {0.2, 0.2}));
  EXPECT_NEAR(2 * instantaneous_eigensystem(small, 0.5).theta, 0.049958395721942765, 1e-15);
  // g' = 0 and Delta = 0 both switch the counterdiabatic field off.
  EXPECT_EQ(counterdiabatic_h1(small, 0.5).cwiseAbs().maxCoeff(), 0.0);
  const LZParams no_gap(0, ControlSchedule::linear(1, 0.5, 1));
  EXPECT_EQ(counterdiabatic_h1(no_gap, 0.5).cwiseAbs().maxCoeff(), 0.0);
}

TEST(LZModel, LargeDetuningLimit) {
  const LZParams lz(1e-3, ControlSchedule::table({0, 1}, {1e3, 1e3}));
  const Eigensystem es = instantaneous_eigensystem(lz, 0.5);
  EXPECT_LT(es.theta, 1e-6);
  // H0 is dominated by +g sigma_z, whose upper eigenvector is the +z state.
  EXPECT_NEAR(std::abs(es.psi_plus(0)), 1, 1e-12);
}

TEST(LZModel, CrossingValues) {
  const double tau = 50;
  const LZParams lz = cosine_model(tau);
  EXPECT_NEAR(lz.schedule.eval(tau / 2).gprime, -kOmega0 * kPi / (2 * tau), 1e-15);
  EXPECT_NEAR(counterdiabatic_coefficient(lz, tau / 2), kPi / tau, 1e-15);
  const EffectiveControls c = effective_controls(lz, tau / 2);
  EXPECT_NEAR(c.xi, kPi / tau, 1e-15);
  EXPECT_LT((c.hamiltonian() - transitionless_hamiltonian(lz, tau / 2)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(LZModel, EffectiveControlPhaseLimits) {
  const LZParams idle(0.3, ControlSchedule::table({0, 1}, {0.5, 0.5}));
  EXPECT_EQ(effective_controls(idle, 0.5).phase_eff, 0.0);
  const LZParams pure_y(0, ControlSchedule::linear(1, 2, 1));
  // With Delta = 0 there is no sigma_x drive and the field carries no sigma_y either.
  EXPECT_NEAR(effective_controls(pure_y, 0.25).omega_eff, 0, 1e-15);
  EXPECT_THROW(effective_controls(pure_y, 0.5), DegenerateSpectrum);  // Delta = g = 0
  EffectiveControls y_only;
  y_only.omega_eff = 0.4;
  y_only.phase_eff = -kPi / 2;
  EXPECT_LT((y_only.hamiltonian() - 0.4 * pauli::y()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(LZModel, DiscretizeStepCounts) {
  const LZParams lz = cosine_model();
  const PulseSequence one = discretize(lz, 1);
  ASSERT_EQ(one.steps.size(), 1u);
  EXPECT_NEAR(one.steps[0].duration, 50, 1e-12);
  const EffectiveControls mid = effective_controls(lz, 25);
  EXPECT_NEAR(one.steps[0].omega_eff, mid.omega_eff, 1e-15);
  EXPECT_NEAR(one.steps[0].detuning, mid.detuning, 1e-15);

  const PulseSequence twenty = discretize(lz, 20);
  ASSERT_EQ(twenty.steps.size(), 20u);
  for (const PulseStep& s : twenty.steps) EXPECT_NEAR(s.duration, 2.5, 1e-12);
  EXPECT_THROW(discretize(lz, 0), InvalidArgument);
}

TEST(LZModel, TwentyStepSequenceFollowsContinuousDrive) {
  const LZParams lz = cosine_model();
  const DensityMatrix rho0 = DensityMatrix::from_pure(instantaneous_eigensystem(lz, 0).psi_plus);
  const DensityMatrix stepped = propagate_pulse_sequence(discretize(lz, 20), rho0).states.back();
  const DensityMatrix smooth = propagate_unitary([&](double t) { return transitionless_hamiltonian(lz, t); }, rho0,
                                                 TimeGrid{0, 50, 2, 400})
                                   .states.back();
  EXPECT_LT(trace_distance(stepped, smooth), 5e-3);
}

}  // namespace
}  // namespace qslkit
