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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qslkit/density_matrix.hpp"
#include "qslkit/lz_model.hpp"

namespace qslkit {

using HamiltonianFn = std::function<ComplexMatrix(double)>;

/// Output times t0 + i (t1 - t0)/(n_output - 1); each output interval is
/// split into substeps_per_output integration steps.
struct TimeGrid {
  double t0 = 0;
  double t1 = 1;
  int n_output = 2001;
  int substeps_per_output = 4;

  void validate() const;
  double time(int i) const;
  double output_spacing() const { return (t1 - t0) / (n_output - 1); }
};

struct TrajectoryMeta {
  std::string scenario;
  TimeGrid grid;
  std::uint64_t seed = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  TrajectoryMeta meta;

  std::size_t size() const { return times.size(); }
};

struct LindbladModel {
  HamiltonianFn hamiltonian;
  ComplexMatrix collapse = pauli::lowering();
  double gamma_eff = 0;  ///< rad/us
};

/// rho <- U rho U^dagger on every substep, with U the fourth-order
/// commutator-free Magnus propagator (two exponentials from H sampled at the
/// Gauss-Legendre nodes).
/// Throws NumericalFailure (naming the time) if a Hamiltonian sample is not
/// Hermitian.
Trajectory propagate_unitary(const HamiltonianFn& hamiltonian, const DensityMatrix& rho0, const TimeGrid& grid);

/// Exact exponential per constant step; records t = 0 and every step boundary.
Trajectory propagate_pulse_sequence(const PulseSequence& seq, const DensityMatrix& rho0);

/// Fixed-step RK4 for
///   d rho/dt = -i[H, rho] + (gamma/2)(2 L rho L^dag - L^dag L rho - rho L^dag L).
/// The step is the finer of the grid substep and 0.01 / max(|H|, gamma).
/// Throws NumericalFailure if the trace drifts by more than 1e-6.
Trajectory propagate_lindblad(const LindbladModel& model, const DensityMatrix& rho0, const TimeGrid& grid);

/// Right-hand side of the master equation at fixed H.
ComplexMatrix lindblad_rhs(const ComplexMatrix& h, const ComplexMatrix& collapse, double gamma,
                           const ComplexMatrix& rho);

/// t_us, bx, by, bz, purity
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace qslkit
