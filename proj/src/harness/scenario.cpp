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

#include "qslkit/harness/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "qslkit/io.hpp"
#include "qslkit/thermal.hpp"

#ifndef QSLKIT_VERSION
#define QSLKIT_VERSION "0.0.0"
#endif

namespace qslkit::harness {

namespace {

bool all_pure(const Trajectory& traj) {
  return std::all_of(traj.states.begin(), traj.states.end(),
                     [](const DensityMatrix& r) { return std::abs(r.purity() - 1) <= 1e-6; });
}

DensityMatrix thermal_target(const ScenarioConfig& c) {
  const LZParams lz(c.delta_rad_per_us, c.control_schedule());
  return thermal_state(h0(lz, c.grid.t0), c.beta());
}

std::vector<double> tracking_fidelity(const LZParams& lz, const Trajectory& traj) {
  const Eigensystem e0 = instantaneous_eigensystem(lz, traj.times.front());
  const ComplexMatrix& r0 = traj.states.front().matrix();
  const double p_plus = (e0.psi_plus.adjoint() * r0 * e0.psi_plus)(0, 0).real();
  const double p_minus = (e0.psi_minus.adjoint() * r0 * e0.psi_minus)(0, 0).real();
  std::vector<double> out;
  out.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Eigensystem e = instantaneous_eigensystem(lz, traj.times[i]);
    ComplexMatrix ideal = p_plus * e.psi_plus * e.psi_plus.adjoint() + p_minus * e.psi_minus * e.psi_minus.adjoint();
    ideal /= ideal.trace().real();
    ideal = (ideal + ideal.adjoint()) / 2.0;
    out.push_back(uhlmann_fidelity(traj.states[i], DensityMatrix::from_matrix(ideal)));
  }
  return out;
}

void run_tomography(ScenarioData& d) {
  const ScenarioConfig& c = d.config;
  const Trajectory& traj = *d.trajectory;
  const int n = int(traj.size());
  const int points = c.tomography_points;
  for (int k = 0; k < points; ++k) {
    const int idx = points == 1 ? 0 : int(std::lround(double(k) * (n - 1) / (points - 1)));
    const DensityMatrix& rho = traj.states[std::size_t(idx)];
    const std::uint64_t seed = c.seed + std::uint64_t(k);
    TomographyPoint pt;
    pt.t_us = traj.times[std::size_t(idx)];
    pt.records = {measure_populations(rho, Basis::x, c.shots, seed), measure_populations(rho, Basis::y, c.shots, seed),
                  measure_populations(rho, Basis::z, c.shots, seed)};
    const DensityMatrix est =
        reconstruct_density(stokes_from_records({pt.records.begin(), pt.records.end()}));
    d.tomography_trace_distance.push_back(trace_distance(est, rho));
    d.tomography.push_back(pt);
  }
}

void write_prior_csv(std::ostream& os, const PriorQsl& prior) {
  io::write_csv_row(os, {"t_us", "angle_L_rad", "angle_rate_abs", "v_qsl"});
  for (std::size_t i = 0; i < prior.times.size(); ++i) {
    io::write_csv_row(os, {io::format_double(prior.times[i]), io::format_double(prior.angle[i]),
                           io::format_optional(prior.angle_rate[i]), io::format_optional(prior.v_qsl[i])});
  }
}

template <typename Writer>
void write_file(const std::filesystem::path& path, std::vector<std::string>& files, Writer&& writer) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  writer(os);
  if (!os) throw std::runtime_error("write failed for '" + path.string() + "'");
  files.push_back(path.filename().string());
}

std::optional<double> max_of(const std::vector<std::optional<double>>& v) {
  std::optional<double> best;
  for (const auto& x : v)
    if (x && (!best || *x > *best)) best = x;
  return best;
}

}  // namespace

const char* version() { return QSLKIT_VERSION; }

ScenarioData simulate_scenario(const ScenarioConfig& config) {
  ScenarioData d;
  d.config = config;
  const ScenarioConfig& c = d.config;

  if (c.scenario == Scenario::prep) {
    const DensityMatrix target = thermal_target(c);
    const PrepChannel channel{c.gamma_eff_rad_per_us};
    d.prep = optimize_prep(target, channel, c.optimizer);
    Trajectory traj = simulate_prep(d.prep->controls, channel);
    traj.meta.seed = c.seed;
    d.trajectory = std::move(traj);
    return d;
  }

  DensityMatrix rho0 = DensityMatrix::maximally_mixed(2);
  if (c.scenario == Scenario::sm_example1) {
    const ComplexMatrix h = pauli::z() / 2.0;
    d.hamiltonian = [h](double) { return h; };
    rho0 = DensityMatrix::from_pure(ComplexVector((ket_excited() + ket_ground()) / std::sqrt(2.0)));
  } else {
    d.lz.emplace(c.delta_rad_per_us, c.control_schedule());
    const LZParams lz = *d.lz;
    if (c.counterdiabatic) d.hamiltonian = [lz](double t) { return transitionless_hamiltonian(lz, t); };
    else d.hamiltonian = [lz](double t) { return h0(lz, t); };

    if (c.scenario == Scenario::fig3) {
      const DensityMatrix target = thermal_target(c);
      if (c.simulate_prep) {
        d.prep = optimize_prep(target, PrepChannel{c.gamma_eff_rad_per_us}, c.optimizer);
        rho0 = d.prep->final_state;
      } else {
        rho0 = target;
      }
    } else {
      rho0 = DensityMatrix::from_pure(instantaneous_eigensystem(lz, c.grid.t0).psi_plus);
    }
  }

  Trajectory traj = propagate_unitary(d.hamiltonian, rho0, c.grid);
  traj.meta.scenario = to_string(c.scenario);
  traj.meta.seed = c.seed;

  CostRateFn cost;
  if (d.lz && c.counterdiabatic) {
    const LZParams lz = *d.lz;
    cost = [lz](double t) { return cost_rate(lz, t); };
  }
  d.metrics = compute_metrics(traj, d.hamiltonian, cost, c.s_list);
  d.tightness_times = locate_tightness(*d.metrics);

  if (d.lz) {
    d.tracking_fidelity = tracking_fidelity(*d.lz, traj);
    if (c.counterdiabatic && all_pure(traj)) d.prior = prior_vqsl(*d.lz, traj);
    if (c.counterdiabatic && c.scenario != Scenario::tomography) d.pulses = discretize(*d.lz, c.n_pulse_steps);
  }
  d.trajectory = std::move(traj);
  if (c.scenario == Scenario::tomography) run_tomography(d);
  return d;
}

RunSummary summarize(const ScenarioData& d) {
  RunSummary s;
  s.scenario = to_string(d.config.scenario);
  s.parameters = to_json(d.config);
  s.tightness_times = d.tightness_times;
  s.version = version();
  if (d.metrics) {
    const MetricsSeries& m = *d.metrics;
    for (const auto& [sp, values] : m.vqsl) {
      const auto it = std::max_element(values.begin(), values.end());
      if (it != values.end()) s.peak_times.emplace_back(sp.label(), m.times[std::size_t(it - values.begin())]);
    }
    s.max_ratio = max_of(m.ratio);
    if (!m.speed.empty()) s.max_speed = *std::max_element(m.speed.begin(), m.speed.end());
  }
  if (!d.tracking_fidelity.empty())
    s.min_tracking_fidelity = *std::min_element(d.tracking_fidelity.begin(), d.tracking_fidelity.end());
  if (d.prep) s.prep_fidelity = d.prep->fidelity;
  if (!d.tomography_trace_distance.empty())
    s.max_tomography_trace_distance =
        *std::max_element(d.tomography_trace_distance.begin(), d.tomography_trace_distance.end());
  return s;
}

nlohmann::ordered_json RunSummary::to_json() const {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["version"] = version;
  j["parameters"] = parameters;
  j["tightness_times_us"] = tightness_times;
  nlohmann::ordered_json peaks = nlohmann::ordered_json::object();
  for (const auto& [label, t] : peak_times) peaks["vqsl_s" + label] = t;
  j["peak_times_us"] = peaks;
  j["max_ratio_speed_over_cost"] = opt(max_ratio);
  j["max_speed_absPdot"] = opt(max_speed);
  j["min_tracking_fidelity"] = opt(min_tracking_fidelity);
  j["prep_fidelity"] = opt(prep_fidelity);
  j["max_tomography_trace_distance"] = opt(max_tomography_trace_distance);
  j["files"] = files;
  j["wall_time_s"] = wall_time_s;
  return j;
}

RunSummary run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

  const ScenarioData d = simulate_scenario(config);
  RunSummary s = summarize(d);
  std::vector<std::string>& files = s.files;

  if (d.trajectory) write_file(out_dir / "trajectory.csv", files, [&](std::ostream& os) { write_trajectory_csv(os, *d.trajectory); });
  if (d.metrics) write_file(out_dir / "metrics.csv", files, [&](std::ostream& os) { write_metrics_csv(os, *d.metrics); });
  if (d.pulses) write_file(out_dir / "pulses.csv", files, [&](std::ostream& os) { write_pulse_csv(os, *d.pulses); });
  if (d.prior) write_file(out_dir / "prior.csv", files, [&](std::ostream& os) { write_prior_csv(os, *d.prior); });
  if (d.prep) {
    write_file(out_dir / "prep_result.csv", files, [&](std::ostream& os) { write_prep_csv(os, *d.prep); });
    write_file(out_dir / "prep_summary.json", files, [&](std::ostream& os) {
      write_prep_summary_json(os, *d.prep, config.optimizer, PrepChannel{config.gamma_eff_rad_per_us});
    });
  }
  if (!d.tomography.empty())
    write_file(out_dir / "tomography.csv", files, [&](std::ostream& os) { write_tomography_csv(os, d.tomography); });

  files.push_back("summary.json");
  s.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ofstream os(out_dir / "summary.json");
  if (!os) throw std::runtime_error("cannot write '" + (out_dir / "summary.json").string() + "'");
  os << s.to_json().dump(2) << '\n';
  return s;
}

std::vector<SweepPoint> run_sweep(const nlohmann::json& base, const std::string& param,
                                  const std::vector<std::string>& values, const std::filesystem::path& out_dir,
                                  unsigned jobs) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<ScenarioConfig> configs;
  std::vector<SweepPoint> points;
  for (const std::string& v : values) {
    nlohmann::json doc = base;
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(v);
    } catch (const nlohmann::json::parse_error&) {
      parsed = v;
    }
    doc[param] = parsed;
    configs.push_back(config_from_json(doc));
    points.push_back({v, out_dir / (param + "_" + v), {}});
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        points[i].summary = run_scenario(configs[i], points[i].out_dir);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  const unsigned n_workers = std::max(1u, std::min<unsigned>(jobs, unsigned(configs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return points;
}

}  // namespace qslkit::harness
