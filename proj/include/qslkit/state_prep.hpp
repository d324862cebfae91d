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

// Dissipative preparation of a target qubit state from |g>.
//
// Each of n_steps piecewise-constant steps applies
//   H = (delta/2) sigma_z + (Omega_i/2) sigma_x + 2 f1 sigma_y + 2 f2 sigma_x
// while an engineered decay |e> -> |g> at rate gamma_eff acts through the
// collapse operator sigma_- = |g><e|. The step table (f1, f2, delta) is
// found with the cross-entropy method: sample tables from a diagonal
// Gaussian, keep the elite fraction by fidelity, refit, repeat.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <vector>

#include "qslkit/density_matrix.hpp"
#include "qslkit/dynamics.hpp"

namespace qslkit {

inline constexpr double kDefaultPrepRabi = 2 * std::numbers::pi * 0.02;  ///< Omega_i, rad/us
inline constexpr double kDefaultGammaEff = 2 * std::numbers::pi * 0.04;  ///< rad/us

struct PrepStep {
  double f_opt1 = 0;  ///< rad/us, sigma_y control
  double f_opt2 = 0;  ///< rad/us, sigma_x control
  double delta = 0;   ///< rad/us, laser detuning
};

struct PrepControls {
  double omega_i = kDefaultPrepRabi;
  double step_duration = 0.125 / kDefaultPrepRabi;  ///< us
  std::vector<PrepStep> steps = std::vector<PrepStep>(13);

  int n_steps() const { return int(steps.size()); }
  /// Throws InvalidArgument on empty tables, non-positive durations or
  /// controls outside |f| <= f_max.
  void validate(double f_max) const;
};

ComplexMatrix prep_hamiltonian(const PrepControls& controls, int step);

/// Single-beam form of a prep step:
///   H = (rabi/2)(cos(phase) sigma_x - sin(phase) sigma_y) + (detuning/2) sigma_z
/// with rabi = sqrt(16 f1^2 + (Omega_i + 4 f2)^2), phase = atan2(-4 f1, Omega_i + 4 f2).
struct PrepPulse {
  double rabi = 0;
  double phase = 0;
  double detuning = 0;
  ComplexMatrix hamiltonian() const;
};

PrepPulse prep_pulse(const PrepControls& controls, int step);

/// Omega_1^2 / Gamma for adiabatic elimination of the auxiliary level.
double gamma_eff(double omega1, double gamma);

/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2; closed form tr(rho sigma) + 2 sqrt(det rho det sigma) for qubits.
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct PrepChannel {
  double gamma_eff = kDefaultGammaEff;
  int substeps_per_step = 50;
};

struct OptimizerConfig {
  int population = 32;
  double elite_fraction = 0.25;
  int iterations = 15;
  int max_episodes = 500;
  std::uint64_t seed = 20240917;
  double control_bound = 1.0;    ///< |f1|, |f2| <= bound, rad/us
  double detuning_bound = 1.0;   ///< |delta| <= bound, rad/us
  double initial_spread = 0.1;   ///< initial std as a fraction of the bounds
  double smoothing = 0.8;        ///< weight of the elite statistics in each refit
  double min_fidelity = 0.90;    ///< below this the result is flagged non-converged
  int n_steps = 13;
  double omega_i = kDefaultPrepRabi;

  void validate() const;
};

struct PrepResult {
  PrepControls controls;
  DensityMatrix final_state = DensityMatrix::maximally_mixed(2);
  double fidelity = 0;
  int episodes_used = 0;
  bool converged = false;  ///< fidelity >= min_fidelity and the target is reachable by the channel
  std::vector<double> best_fidelity_history;  ///< best-so-far after each iteration
};

/// Lindblad evolution of |g><g| under the step table; records every step boundary.
Trajectory simulate_prep(const PrepControls& controls, const PrepChannel& channel);

PrepResult optimize_prep(const DensityMatrix& target, const PrepChannel& channel, const OptimizerConfig& config);

/// step_index, t_start_us, duration_us, f_opt1_rad_per_us, f_opt2_rad_per_us, delta_rad_per_us, rabi_rad_per_us, phase_rad
void write_prep_csv(std::ostream& os, const PrepResult& result);
void write_prep_summary_json(std::ostream& os, const PrepResult& result, const OptimizerConfig& config,
                             const PrepChannel& channel);

}  // namespace qslkit
