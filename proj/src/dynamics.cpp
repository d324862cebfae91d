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

#include "qslkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "qslkit/generators.hpp"
#include "qslkit/io.hpp"

namespace qslkit {

namespace {

const Complex kI(0, 1);

// Fourth-order commutator-free Magnus step: two exponentials built from
// H sampled at the Gauss-Legendre nodes of the substep.
const double kGaussNode1 = 0.5 - std::sqrt(3.0) / 6;
const double kGaussNode2 = 0.5 + std::sqrt(3.0) / 6;
const double kCfWeightA = (3 - 2 * std::sqrt(3.0)) / 12;
const double kCfWeightB = (3 + 2 * std::sqrt(3.0)) / 12;

DensityMatrix checked_state(ComplexMatrix m, double t) {
  m = (m + m.adjoint()) / 2.0;
  try {
    return DensityMatrix::from_matrix(std::move(m));
  } catch (const NotAState& e) {
    std::ostringstream os;
    os << "state left the density-matrix set at t=" << t << ": " << e.what();
    throw NumericalFailure(os.str());
  }
}

ComplexMatrix sample_hamiltonian(const HamiltonianFn& hamiltonian, double t, Eigen::Index dim) {
  ComplexMatrix h = hamiltonian(t);
  if (h.rows() != dim || h.cols() != dim) {
    std::ostringstream os;
    os << "Hamiltonian at t=" << t << " has shape " << h.rows() << "x" << h.cols() << ", expected " << dim;
    throw NumericalFailure(os.str());
  }
  if (!all_finite(h) || !is_hermitian(h, 1e-12)) {
    std::ostringstream os;
    os << "Hamiltonian sample at t=" << t << " is not Hermitian; integration aborted";
    throw NumericalFailure(os.str());
  }
  return h;
}

}  // namespace

void TimeGrid::validate() const {
  if (!std::isfinite(t0) || !std::isfinite(t1) || !(t1 > t0)) throw InvalidArgument("TimeGrid: need t1 > t0");
  if (n_output < 2) throw InvalidArgument("TimeGrid: n_output must be >= 2");
  if (substeps_per_output < 1) throw InvalidArgument("TimeGrid: substeps_per_output must be >= 1");
}

double TimeGrid::time(int i) const {
  if (i == n_output - 1) return t1;
  return t0 + (t1 - t0) * double(i) / double(n_output - 1);
}

Trajectory propagate_unitary(const HamiltonianFn& hamiltonian, const DensityMatrix& rho0, const TimeGrid& grid) {
  grid.validate();
  const Eigen::Index dim = rho0.dim();
  Trajectory traj;
  traj.meta.grid = grid;
  traj.times.reserve(std::size_t(grid.n_output));
  traj.states.reserve(std::size_t(grid.n_output));
  traj.times.push_back(grid.t0);
  traj.states.push_back(rho0);

  ComplexMatrix rho = rho0.matrix();
  for (int i = 1; i < grid.n_output; ++i) {
    const double ta = grid.time(i - 1);
    const double tb = grid.time(i);
    const double dt = (tb - ta) / grid.substeps_per_output;
    for (int k = 0; k < grid.substeps_per_output; ++k) {
      const double ts = ta + k * dt;
      const ComplexMatrix h1 = sample_hamiltonian(hamiltonian, ts + kGaussNode1 * dt, dim);
      const ComplexMatrix h2 = sample_hamiltonian(hamiltonian, ts + kGaussNode2 * dt, dim);
      const ComplexMatrix u = matrix_exponential((-kI * dt) * (kCfWeightA * h1 + kCfWeightB * h2)) *
                              matrix_exponential((-kI * dt) * (kCfWeightB * h1 + kCfWeightA * h2));
      rho = u * rho * u.adjoint();
    }
    traj.times.push_back(tb);
    traj.states.push_back(checked_state(rho, tb));
  }
  return traj;
}

Trajectory propagate_pulse_sequence(const PulseSequence& seq, const DensityMatrix& rho0) {
  if (seq.steps.empty()) throw InvalidArgument("propagate_pulse_sequence: empty sequence");
  if (rho0.dim() != 2) throw InvalidArgument("propagate_pulse_sequence: pulse steps act on a qubit");
  Trajectory traj;
  traj.meta.grid = TimeGrid{0, seq.total_duration(), int(seq.steps.size()) + 1, 1};
  traj.times.push_back(0);
  traj.states.push_back(rho0);
  ComplexMatrix rho = rho0.matrix();
  double t = 0;
  for (const PulseStep& step : seq.steps) {
    if (!(step.duration > 0)) throw InvalidArgument("propagate_pulse_sequence: step durations must be positive");
    const ComplexMatrix u = matrix_exponential((-kI * step.duration) * step.hamiltonian());
    rho = u * rho * u.adjoint();
    t += step.duration;
    traj.times.push_back(t);
    traj.states.push_back(checked_state(rho, t));
  }
  return traj;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& h, const ComplexMatrix& collapse, double gamma,
                           const ComplexMatrix& rho) {
  ComplexMatrix out = -kI * (h * rho - rho * h);
  if (gamma != 0) {
    const ComplexMatrix ldag = collapse.adjoint();
    const ComplexMatrix ldl = ldag * collapse;
    out += (gamma / 2) * (2.0 * collapse * rho * ldag - ldl * rho - rho * ldl);
  }
  return out;
}

Trajectory propagate_lindblad(const LindbladModel& model, const DensityMatrix& rho0, const TimeGrid& grid) {
  grid.validate();
  if (!(model.gamma_eff >= 0) || !std::isfinite(model.gamma_eff))
    throw InvalidArgument("propagate_lindblad: gamma_eff must be finite and >= 0");
  const Eigen::Index dim = rho0.dim();
  if (model.collapse.rows() != dim || model.collapse.cols() != dim)
    throw InvalidArgument("propagate_lindblad: collapse operator dimension mismatch");

  Trajectory traj;
  traj.meta.grid = grid;
  traj.times.push_back(grid.t0);
  traj.states.push_back(rho0);

  ComplexMatrix rho = rho0.matrix();
  for (int i = 1; i < grid.n_output; ++i) {
    const double ta = grid.time(i - 1);
    const double tb = grid.time(i);
    const double interval = tb - ta;

    const ComplexMatrix ha = sample_hamiltonian(model.hamiltonian, ta, dim);
    const ComplexMatrix hb = sample_hamiltonian(model.hamiltonian, tb, dim);
    const double rate = std::max({spectral_norm_hermitian(ha), spectral_norm_hermitian(hb), model.gamma_eff});
    int substeps = grid.substeps_per_output;
    if (rate > 0) substeps = std::max(substeps, int(std::ceil(interval * rate / 0.01)));
    const double h = interval / substeps;

    for (int k = 0; k < substeps; ++k) {
      const double t = ta + k * h;
      const ComplexMatrix h0m = k == 0 ? ha : sample_hamiltonian(model.hamiltonian, t, dim);
      const ComplexMatrix hmid = sample_hamiltonian(model.hamiltonian, t + h / 2, dim);
      const ComplexMatrix h1m = k + 1 == substeps ? hb : sample_hamiltonian(model.hamiltonian, t + h, dim);
      const ComplexMatrix k1 = lindblad_rhs(h0m, model.collapse, model.gamma_eff, rho);
      const ComplexMatrix k2 = lindblad_rhs(hmid, model.collapse, model.gamma_eff, rho + (h / 2) * k1);
      const ComplexMatrix k3 = lindblad_rhs(hmid, model.collapse, model.gamma_eff, rho + (h / 2) * k2);
      const ComplexMatrix k4 = lindblad_rhs(h1m, model.collapse, model.gamma_eff, rho + h * k3);
      rho += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const double drift = std::abs(rho.trace() - Complex(1));
    if (drift > 1e-6) {
      std::ostringstream os;
      os << "Lindblad trace drifted by " << drift << " at t=" << tb << "; use a finer time grid";
      throw NumericalFailure(os.str());
    }
    traj.times.push_back(tb);
    traj.states.push_back(checked_state(rho, tb));
  }
  return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  io::write_csv_row(os, {"t_us", "bx", "by", "bz", "purity"});
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& rho = traj.states[i];
    if (rho.dim() == 2) {
      const Eigen::Vector3d b = bloch_vector(rho);
      io::write_csv_row(os, {io::format_double(traj.times[i]), io::format_double(b.x()), io::format_double(b.y()),
                             io::format_double(b.z()), io::format_double(rho.purity())});
    } else {
      io::write_csv_row(os, {io::format_double(traj.times[i]), "", "", "", io::format_double(rho.purity())});
    }
  }
}

}  // namespace qslkit
