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

// Landau-Zener family H0(t) = Delta sigma_x + g(t) sigma_z and its
// transitionless (counterdiabatic) completion H(t) = H0(t) + Xi(t) sigma_y.
//
// Units: hbar = 1, time in microseconds, energies in rad/us.
//
// Mixing angle: theta(t) = atan2(Delta, g)/2, so cos(2 theta) = g/E and
// sin(2 theta) = Delta/E with E = sqrt(Delta^2 + g^2). In the (|e>, |g>)
// storage basis the eigenvectors are
//   |psi_+> = cos(theta)|e> + sin(theta)|g>     (energy +E)
//   |psi_-> = sin(theta)|e> - cos(theta)|g>     (energy -E)
// i.e. the cos/sin pair written against |0>, |1> of the computational basis
// with sigma_z|0> = |0>.
//
// Effective-control convention (PulseStep): a constant step realises
//   H = Omega (e^{i phi} sigma_+ + e^{-i phi} sigma_-) + detuning sigma_z
//     = Omega (cos(phi) sigma_x - sin(phi) sigma_y) + detuning sigma_z,
// so Omega = sqrt(Delta^2 + Xi^2) and phi = atan2(-Xi, Delta). Hardware that
// writes the Rabi term as (Omega'/2)(...) uses Omega' = 2 Omega with the
// same phase.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qslkit/density_matrix.hpp"
#include "qslkit/linalg.hpp"

namespace qslkit {

struct DriveSample {
  double g = 0;       ///< rad/us
  double gprime = 0;  ///< rad/us^2
};

/// Detuning ramp g(t) on [0, tau] with an analytic derivative.
class ControlSchedule {
 public:
  enum class Kind { cosine, linear, table };

  /// g(t) = (omega0/2) cos(pi t / tau)
  static ControlSchedule cosine(double omega0, double tau);
  /// g(t) = a - b t / tau
  static ControlSchedule linear(double a, double b, double tau);
  /// Piecewise-linear interpolation through (times, values); the derivative
  /// is the slope of the segment containing t (right segment at knots).
  /// times must start at 0 and increase strictly; tau is the last knot.
  static ControlSchedule table(std::vector<double> times, std::vector<double> values);

  Kind kind() const { return kind_; }
  double tau() const { return tau_; }
  double omega0() const { return p0_; }
  double ramp_a() const { return p0_; }
  double ramp_b() const { return p1_; }

  /// Throws RangeError for t outside [0, tau].
  DriveSample eval(double t) const;

 private:
  ControlSchedule() = default;
  Kind kind_ = Kind::cosine;
  double tau_ = 1;
  double p0_ = 0;
  double p1_ = 0;
  std::vector<double> knots_;
  std::vector<double> values_;
};

inline DriveSample g_eval(const ControlSchedule& schedule, double t) { return schedule.eval(t); }

struct LZParams {
  LZParams(double delta, ControlSchedule schedule);

  double delta;
  ControlSchedule schedule;
  double tau() const { return schedule.tau(); }
};

struct Eigensystem {
  double theta = 0;         ///< rad
  double energy = 0;        ///< E = sqrt(Delta^2 + g^2); eigenvalues are +E and -E
  ComplexVector psi_plus;   ///< eigenvalue +E
  ComplexVector psi_minus;  ///< eigenvalue -E
};

struct EffectiveControls {
  double omega_eff = 0;  ///< rad/us
  double phase_eff = 0;  ///< rad
  double detuning = 0;   ///< rad/us, the sigma_z coefficient g(t)
  double xi = 0;         ///< rad/us, the sigma_y coefficient

  /// Omega (cos phi sigma_x - sin phi sigma_y) + detuning sigma_z
  ComplexMatrix hamiltonian() const;
};

ComplexMatrix h0(const LZParams& lz, double t);
Eigensystem instantaneous_eigensystem(const LZParams& lz, double t);

/// Xi(t) = -Delta g'(t) / (2 (Delta^2 + g^2)).
double counterdiabatic_coefficient(const LZParams& lz, double t);
/// theta'(t) computed from d(cos 2 theta)/dt; an algebraically independent
/// route to the same quantity as counterdiabatic_coefficient.
double mixing_angle_rate(const LZParams& lz, double t);

/// H1(t) = Xi(t) sigma_y; cross-checked against theta'(t).
ComplexMatrix counterdiabatic_h1(const LZParams& lz, double t);
/// H0 + H1
ComplexMatrix transitionless_hamiltonian(const LZParams& lz, double t);
EffectiveControls effective_controls(const LZParams& lz, double t);

struct PulseStep {
  double duration = 0;  ///< us
  double omega_eff = 0;
  double phase_eff = 0;
  double detuning = 0;

  ComplexMatrix hamiltonian() const;
};

struct PulseSequence {
  std::vector<PulseStep> steps;
  double total_duration() const;
};

/// Equal-duration steps with controls sampled at step midpoints.
PulseSequence discretize(const LZParams& lz, int n_steps);

/// step_index, duration_us, omega_eff_rad_per_us, phase_eff_rad, detuning_rad_per_us
void write_pulse_csv(std::ostream& os, const PulseSequence& seq);

}  // namespace qslkit
