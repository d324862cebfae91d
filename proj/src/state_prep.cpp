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

#include "qslkit/state_prep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include <json.hpp>

#include "qslkit/generators.hpp"
#include "qslkit/io.hpp"

namespace qslkit {

namespace {

constexpr int kParamsPerStep = 3;

PrepControls unflatten(const std::vector<double>& x, const OptimizerConfig& cfg) {
  PrepControls c;
  c.omega_i = cfg.omega_i;
  c.step_duration = 0.125 / cfg.omega_i;
  c.steps.resize(std::size_t(cfg.n_steps));
  for (std::size_t k = 0; k < c.steps.size(); ++k)
    c.steps[k] = {x[kParamsPerStep * k], x[kParamsPerStep * k + 1], x[kParamsPerStep * k + 2]};
  return c;
}

double bound_for(std::size_t param, const OptimizerConfig& cfg) {
  return param % kParamsPerStep == 2 ? cfg.detuning_bound : cfg.control_bound;
}

DensityMatrix final_state(const PrepControls& controls, const PrepChannel& channel) {
  return simulate_prep(controls, channel).states.back();
}

}  // namespace

void PrepControls::validate(double f_max) const {
  if (steps.empty()) throw InvalidArgument("prep controls need at least one step");
  if (!(step_duration > 0) || !std::isfinite(step_duration))
    throw InvalidArgument("prep step duration must be positive");
  if (!std::isfinite(omega_i)) throw InvalidArgument("prep Rabi frequency must be finite");
  for (const PrepStep& s : steps) {
    for (double v : {s.f_opt1, s.f_opt2})
      if (!std::isfinite(v) || std::abs(v) > f_max) throw InvalidArgument("prep control outside |f| <= f_max");
    if (!std::isfinite(s.delta)) throw InvalidArgument("prep detuning must be finite");
  }
}

ComplexMatrix prep_hamiltonian(const PrepControls& controls, int step) {
  if (step < 0 || step >= controls.n_steps()) throw InvalidArgument("prep_hamiltonian: step index out of range");
  const PrepStep& s = controls.steps[std::size_t(step)];
  return pauli::combine(0.0, controls.omega_i / 2 + 2 * s.f_opt2, 2 * s.f_opt1, s.delta / 2);
}

ComplexMatrix PrepPulse::hamiltonian() const {
  return pauli::combine(0.0, rabi / 2 * std::cos(phase), -rabi / 2 * std::sin(phase), detuning / 2);
}

PrepPulse prep_pulse(const PrepControls& controls, int step) {
  if (step < 0 || step >= controls.n_steps()) throw InvalidArgument("prep_pulse: step index out of range");
  const PrepStep& s = controls.steps[std::size_t(step)];
  const double in_phase = controls.omega_i + 4 * s.f_opt2;
  const double quadrature = -4 * s.f_opt1;
  return {std::hypot(quadrature, in_phase), std::atan2(quadrature, in_phase), s.delta};
}

double gamma_eff(double omega1, double gamma) {
  if (!(gamma > 0)) throw InvalidArgument("gamma_eff: decay rate Gamma must be positive");
  return omega1 * omega1 / gamma;
}

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidArgument("uhlmann_fidelity: dimension mismatch");
  double f = 0;
  if (rho.dim() == 2) {
    const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
    const double det_r = std::max(0.0, rho.matrix().determinant().real());
    const double det_s = std::max(0.0, sigma.matrix().determinant().real());
    f = overlap + 2 * std::sqrt(det_r * det_s);
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> er(rho.matrix());
    const RealVector roots = er.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix sqrt_rho =
        er.eigenvectors() * roots.cast<Complex>().asDiagonal() * er.eigenvectors().adjoint();
    const ComplexMatrix inner = sqrt_rho * sigma.matrix() * sqrt_rho;
    const double tr = hermitian_eigenvalues(inner).cwiseMax(0.0).cwiseSqrt().sum();
    f = tr * tr;
  }
  return std::clamp(f, 0.0, 1.0);
}

void OptimizerConfig::validate() const {
  if (population < 8) throw InvalidArgument("optimizer population must be >= 8");
  if (!(elite_fraction > 0 && elite_fraction < 1)) throw InvalidArgument("elite_fraction must lie in (0, 1)");
  if (iterations < 1) throw InvalidArgument("optimizer iterations must be >= 1");
  if (max_episodes < population) throw InvalidArgument("episode budget smaller than one population");
  if (!(control_bound > 0) || !(detuning_bound > 0)) throw InvalidArgument("control bounds must be positive");
  if (!(initial_spread > 0)) throw InvalidArgument("initial_spread must be positive");
  if (!(smoothing > 0 && smoothing <= 1)) throw InvalidArgument("smoothing must lie in (0, 1]");
  if (n_steps < 1) throw InvalidArgument("prep needs at least one step");
  if (!(omega_i > 0)) throw InvalidArgument("prep Rabi frequency Omega_i must be positive");
}

Trajectory simulate_prep(const PrepControls& controls, const PrepChannel& channel) {
  controls.validate(std::numeric_limits<double>::max());
  if (channel.substeps_per_step < 1) throw InvalidArgument("prep channel needs at least one substep per step");
  Trajectory traj;
  traj.meta.scenario = "prep";
  traj.meta.grid = TimeGrid{0, controls.step_duration * controls.n_steps(), controls.n_steps() + 1, 1};
  DensityMatrix rho = DensityMatrix::from_pure(ket_ground());
  traj.times.push_back(0);
  traj.states.push_back(rho);
  for (int k = 0; k < controls.n_steps(); ++k) {
    const ComplexMatrix h = prep_hamiltonian(controls, k);
    LindbladModel model{[h](double) { return h; }, pauli::lowering(), channel.gamma_eff};
    const double ta = k * controls.step_duration;
    const double tb = (k + 1) * controls.step_duration;
    const Trajectory seg = propagate_lindblad(model, rho, TimeGrid{ta, tb, 2, channel.substeps_per_step});
    rho = seg.states.back();
    traj.times.push_back(tb);
    traj.states.push_back(rho);
  }
  return traj;
}

PrepResult optimize_prep(const DensityMatrix& target, const PrepChannel& channel, const OptimizerConfig& config) {
  config.validate();
  if (target.dim() != 2) throw InvalidArgument("optimize_prep: target must be a qubit state");
  if (!(channel.gamma_eff >= 0)) throw InvalidArgument("optimize_prep: gamma_eff must be >= 0");

  const std::size_t dim = std::size_t(config.n_steps) * kParamsPerStep;
  const int iterations = std::min(config.iterations, config.max_episodes / config.population);
  const int n_elite = std::max(2, int(std::ceil(config.elite_fraction * config.population)));

  std::vector<double> mean(dim, 0.0);
  std::vector<double> spread(dim);
  for (std::size_t j = 0; j < dim; ++j) spread[j] = config.initial_spread * bound_for(j, config);

  PrepResult best;
  best.fidelity = -1;
  std::vector<std::vector<double>> samples(std::size_t(config.population), std::vector<double>(dim));
  std::vector<double> scores(std::size_t(config.population));
  std::vector<std::size_t> order(std::size_t(config.population));
  int episodes = 0;

  for (int it = 0; it < iterations; ++it) {
    for (int m = 0; m < config.population; ++m) {
      // One RNG stream per episode, derived from the master seed.
      std::seed_seq seq{std::uint32_t(config.seed), std::uint32_t(config.seed >> 32), std::uint32_t(it),
                        std::uint32_t(m)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> normal(0.0, 1.0);
      auto& x = samples[std::size_t(m)];
      for (std::size_t j = 0; j < dim; ++j) {
        const double b = bound_for(j, config);
        x[j] = std::clamp(mean[j] + spread[j] * normal(rng), -b, b);
      }
      const PrepControls controls = unflatten(x, config);
      const DensityMatrix rho = final_state(controls, channel);
      const double f = uhlmann_fidelity(rho, target);
      scores[std::size_t(m)] = f;
      ++episodes;
      if (f > best.fidelity) {
        best.fidelity = f;
        best.controls = controls;
        best.final_state = rho;
      }
    }
    best.best_fidelity_history.push_back(best.fidelity);

    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    for (std::size_t j = 0; j < dim; ++j) {
      double mu = 0;
      for (int e = 0; e < n_elite; ++e) mu += samples[order[std::size_t(e)]][j];
      mu /= n_elite;
      double var = 0;
      for (int e = 0; e < n_elite; ++e) {
        const double d = samples[order[std::size_t(e)]][j] - mu;
        var += d * d;
      }
      var /= n_elite;
      const double floor = 1e-3 * bound_for(j, config);
      mean[j] = config.smoothing * mu + (1 - config.smoothing) * mean[j];
      spread[j] = std::max(floor, config.smoothing * std::sqrt(var) + (1 - config.smoothing) * spread[j]);
    }
  }
  best.episodes_used = episodes;
  // Without dissipation only pure states are reachable from |g>, so a mixed
  // target can be approached but never hit.
  const bool reachable = channel.gamma_eff > 0 || target.purity() >= 1 - 1e-3;
  best.converged = reachable && best.fidelity >= config.min_fidelity;
  return best;
}

void write_prep_csv(std::ostream& os, const PrepResult& result) {
  io::write_csv_row(os, {"step_index", "t_start_us", "duration_us", "f_opt1_rad_per_us", "f_opt2_rad_per_us",
                         "delta_rad_per_us", "rabi_rad_per_us", "phase_rad"});
  const PrepControls& c = result.controls;
  for (int k = 0; k < c.n_steps(); ++k) {
    const PrepStep& s = c.steps[std::size_t(k)];
    const PrepPulse p = prep_pulse(c, k);
    io::write_csv_row(os, {std::to_string(k), io::format_double(k * c.step_duration), io::format_double(c.step_duration),
                           io::format_double(s.f_opt1), io::format_double(s.f_opt2), io::format_double(s.delta),
                           io::format_double(p.rabi), io::format_double(p.phase)});
  }
}

void write_prep_summary_json(std::ostream& os, const PrepResult& result, const OptimizerConfig& config,
                             const PrepChannel& channel) {
  nlohmann::ordered_json j;
  j["fidelity"] = result.fidelity;
  j["episodes_used"] = result.episodes_used;
  j["converged"] = result.converged;
  j["seed"] = config.seed;
  j["population"] = config.population;
  j["elite_fraction"] = config.elite_fraction;
  j["n_steps"] = result.controls.n_steps();
  j["step_duration_us"] = result.controls.step_duration;
  j["omega_i_rad_per_us"] = result.controls.omega_i;
  j["gamma_eff_rad_per_us"] = channel.gamma_eff;
  j["best_fidelity_history"] = result.best_fidelity_history;
  const Eigen::Vector3d b = bloch_vector(result.final_state);
  j["final_bloch"] = {b.x(), b.y(), b.z()};
  os << j.dump(2) << '\n';
}

}  // namespace qslkit
