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

#include "qslkit/harness/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "qslkit/harness/scenario.hpp"
#include "qslkit/io.hpp"

namespace qslkit::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

std::string list(const std::vector<double>& v, int digits = 4) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fixed(v[i], digits);
  return out + "]";
}

ScenarioConfig config_for(Scenario s, const std::vector<SParameter>& s_list = {}) {
  ScenarioConfig c = default_config(s);
  if (!s_list.empty()) c.s_list = s_list;
  return c;
}

std::vector<SParameter> chain_s() { return {SParameter::neg_inf(), SParameter::of(0)}; }

Eigen::Vector3d random_in_ball(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
  return v.normalized() * std::cbrt(uniform(rng));
}

ComplexMatrix random_hamiltonian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  return pauli::combine(normal(rng), normal(rng), normal(rng), normal(rng));
}

CriterionResult titled(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

/// Results shared between criteria so that expensive runs happen once.
struct Context {
  std::optional<PrepResult> prep;
};

using Check = std::function<CriterionResult(Context&)>;

CriterionResult tradeoff_identity(Context&) {
  CriterionResult r = titled(1, "trade-off identity V^s / dC = sqrt(3^s+1)/sqrt(2) on fig2");
  const auto start = Clock::now();
  const std::vector<SParameter> s_list{SParameter::neg_inf(), SParameter::of(-1), SParameter::of(0),
                                       SParameter::of(1)};
  const ScenarioData d = simulate_scenario(config_for(Scenario::fig2, s_list));
  const MetricsSeries& m = *d.metrics;
  double worst = 0;
  std::size_t compared = 0;
  for (const auto& [s, values] : m.vqsl) {
    const double want = tradeoff_ratio(s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m.ratio[i]) continue;
      worst = std::max(worst, std::abs(values[i] / *m.cost_rate[i] / want - 1));
      ++compared;
    }
  }
  r.seconds = seconds_since(start);
  r.passed = compared > 0 && worst < 1e-9 && r.seconds < 5;
  r.measured = "max rel err " + sci(worst) + " over " + std::to_string(compared) + " (s, t) points";
  r.tolerance = "< 1e-09, runtime < 5 s";
  return r;
}

CriterionResult bound_chain(Context&) {
  CriterionResult r = titled(2, "bound chain |P'| <= V^-inf <= V^0 and max |P'|/dC <= 1/sqrt(2)");
  const auto start = Clock::now();
  std::vector<ScenarioConfig> configs{config_for(Scenario::fig2, chain_s()), config_for(Scenario::fig3, chain_s()),
                                      config_for(Scenario::sm_lz_linear, chain_s())};
  ScenarioConfig warm = config_for(Scenario::fig3, chain_s());
  warm.beta_omega0 = InverseTemperature::finite(2.0);
  configs.push_back(warm);

  double slack = std::numeric_limits<double>::infinity();
  std::optional<double> fig2_max_ratio;
  for (const ScenarioConfig& c : configs) {
    const ScenarioData d = simulate_scenario(c);
    const MetricsSeries& m = *d.metrics;
    const auto& v_inf = m.vqsl_for(SParameter::neg_inf());
    const auto& v_zero = m.vqsl_for(SParameter::of(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
      slack = std::min(slack, v_inf[i] - m.speed[i]);
      slack = std::min(slack, v_zero[i] - v_inf[i]);
    }
    if (c.scenario == Scenario::fig2) {
      for (const auto& x : m.ratio)
        if (x) fig2_max_ratio = std::max(fig2_max_ratio.value_or(0.0), *x);
    }
  }
  r.seconds = seconds_since(start);
  const double limit = 1 / std::sqrt(2.0) + 1e-6;
  r.passed = slack >= -1e-9 && fig2_max_ratio && *fig2_max_ratio <= limit;
  r.measured = "min slack " + sci(slack) + " over fig2, fig3 (beta*Omega0 = inf and 2), sm-lz-linear; fig2 max ratio " +
               (fig2_max_ratio ? fixed(*fig2_max_ratio, 9) : std::string("undefined"));
  r.tolerance = "slack >= -1e-09, ratio <= " + fixed(limit, 9);
  return r;
}

CriterionResult tightness_locations(Context&) {
  CriterionResult r = titled(3, "tightness locations (fig2, sm-lz-linear, sm-example1)");
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream measured;

  const ScenarioData fig2 = simulate_scenario(config_for(Scenario::fig2));
  const auto in_fig2 = [](double t) { return std::abs(t - 29.0) <= 0.5; };
  ok = ok && !fig2.tightness_times.empty() && std::all_of(fig2.tightness_times.begin(), fig2.tightness_times.end(), in_fig2);
  measured << "fig2 t = " << list(fig2.tightness_times, 3) << " us";

  for (double tau : {1e3, 1.0, 1e-2}) {
    ScenarioConfig c = config_for(Scenario::sm_lz_linear);
    c.tau_us = tau;
    c.grid.t1 = tau;
    const ScenarioData d = simulate_scenario(c);
    std::vector<double> fractions;
    for (double t : d.tightness_times) fractions.push_back(t / tau);
    ok = ok && !fractions.empty() &&
         std::all_of(fractions.begin(), fractions.end(), [](double f) { return std::abs(f - 0.501) <= 0.005; });
    measured << "; linear tau=" << tau << " t/tau = " << list(fractions, 5);
  }

  const ScenarioData ex1 = simulate_scenario(config_for(Scenario::sm_example1));
  const MetricsSeries& m = *ex1.metrics;
  const auto& v_inf = m.vqsl_for(SParameter::neg_inf());
  std::optional<double> gap;
  for (double t : ex1.tightness_times) {
    if (std::abs(t - std::numbers::pi / 2) > 1e-6) continue;
    const auto i = std::size_t(std::find(m.times.begin(), m.times.end(), t) - m.times.begin());
    gap = std::abs(v_inf[i] - m.speed[i]);
  }
  ok = ok && gap && *gap < 1e-9;
  measured << "; example1 t = " << list(ex1.tightness_times, 9) << " with |V - |P'|| = "
           << (gap ? sci(*gap) : std::string("n/a"));

  r.seconds = seconds_since(start);
  r.passed = ok && r.seconds < 30;
  r.measured = measured.str();
  r.tolerance = "fig2 29 +- 0.5 us; t/tau 0.501 +- 0.005; pi/2 +- 1e-06 with gap < 1e-09; runtime < 30 s";
  return r;
}

CriterionResult peak_position(Context&) {
  CriterionResult r = titled(4, "argmax of V^-inf on fig2");
  const auto start = Clock::now();
  const ScenarioData d = simulate_scenario(config_for(Scenario::fig2));
  const auto& v = d.metrics->vqsl_for(SParameter::neg_inf());
  const auto it = std::max_element(v.begin(), v.end());
  const double t_peak = d.metrics->times[std::size_t(it - v.begin())];
  r.seconds = seconds_since(start);
  r.passed = std::abs(t_peak - 27.5) <= 0.3;
  r.measured = "t = " + fixed(t_peak, 3) + " us (V^-inf = " + sci(*it) + ")";
  r.tolerance = "27.5 +- 0.3 us";
  return r;
}

CriterionResult prior_nontightness(Context&) {
  CriterionResult r = titled(5, "angle bound loose where the s = -inf bound is tight (sm-lz-linear)");
  const auto start = Clock::now();
  const ScenarioData d = simulate_scenario(config_for(Scenario::sm_lz_linear));
  double worst_factor = 0;
  double t_worst = 0;
  if (d.prior) {
    const PriorQsl& p = *d.prior;
    for (std::size_t i = 0; i < p.times.size(); ++i) {
      if (!p.v_qsl[i] || !p.angle_rate[i] || !(*p.angle_rate[i] > 0)) continue;
      const double f = *p.v_qsl[i] / *p.angle_rate[i];
      if (f > worst_factor) {
        worst_factor = f;
        t_worst = p.times[i];
      }
    }
  }
  std::optional<double> excess;
  const MetricsSeries& m = *d.metrics;
  const auto& v_inf = m.vqsl_for(SParameter::neg_inf());
  for (double t : d.tightness_times) {
    const auto i = std::size_t(std::find(m.times.begin(), m.times.end(), t) - m.times.begin());
    if (m.speed[i] > 0) excess = std::min(excess.value_or(1e300), (v_inf[i] - m.speed[i]) / m.speed[i]);
  }
  r.seconds = seconds_since(start);
  r.passed = d.prior && worst_factor > 10 && excess && *excess < 0.10;
  r.measured = "max v_qsl/|L'| = " + sci(worst_factor) + " at t = " + fixed(t_worst, 2) +
               " us; V^-inf excess at tightness " + (excess ? sci(*excess) : std::string("n/a"));
  r.tolerance = "factor > 10 and excess < 0.10";
  return r;
}

CriterionResult phase_space_oracles(Context&) {
  CriterionResult r = titled(6, "phase-space quadrature oracles vs closed forms");
  const auto start = Clock::now();
  std::mt19937_64 rng(20240917);
  double purity_err = 0;
  double vqsl_err = 0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector3d b0 = random_in_ball(rng);
    const Eigen::Vector3d b = random_in_ball(rng);
    const ComplexMatrix h = random_hamiltonian(rng);
    const DensityMatrix rho0 = qubit_state(b0);
    const DensityMatrix rhot = qubit_state(b);
    const RealVector hv = bloch_vector(h);
    for (double s : {-2.0, 0.0, 1.0}) {
      const SParameter sp = SParameter::of(s);
      purity_err = std::max(purity_err, std::abs(phase_space_purity_oracle(rho0, rhot, sp) - relative_purity(rho0, rhot)));
      const double closed = vqsl_qubit(sp, RealVector(b0), hv, RealVector(b));
      const double quad = vqsl_quadrature_oracle(rho0, h, rhot, sp);
      vqsl_err = std::max(vqsl_err, std::abs(quad - closed) / closed);
    }
  }
  r.seconds = seconds_since(start);
  r.passed = purity_err < 1e-6 && vqsl_err < 1e-4 && r.seconds < 60;
  r.measured = "purity abs err " + sci(purity_err) + ", V^s rel err " + sci(vqsl_err) + " (100 pairs, s = -2, 0, 1)";
  r.tolerance = "< 1e-06 and < 1e-04, runtime < 60 s";
  return r;
}

CriterionResult transitionless_driving(Context&) {
  CriterionResult r = titled(7, "transitionless driving keeps the eigenstate (fig2)");
  const auto start = Clock::now();
  const ScenarioData with = simulate_scenario(config_for(Scenario::fig2));
  ScenarioConfig off = config_for(Scenario::fig2);
  off.counterdiabatic = false;
  const ScenarioData without = simulate_scenario(off);
  const double f_with = *std::min_element(with.tracking_fidelity.begin(), with.tracking_fidelity.end());
  const double f_without = *std::min_element(without.tracking_fidelity.begin(), without.tracking_fidelity.end());
  r.seconds = seconds_since(start);
  r.passed = f_with > 0.999 && f_without < 0.9;
  r.measured = "min fidelity with field " + fixed(f_with, 9) + ", without " + fixed(f_without, 6);
  r.tolerance = "> 0.999 with, < 0.9 without";
  return r;
}

CriterionResult thermal_preparation(Context& ctx) {
  CriterionResult r = titled(8, "thermal-state preparation by the cross-entropy optimizer");
  const auto start = Clock::now();
  const ScenarioData d = simulate_scenario(config_for(Scenario::prep));
  r.seconds = seconds_since(start);
  const PrepResult& p = *d.prep;
  ctx.prep = p;
  const DensityMatrix target = thermal_state(h0(LZParams(d.config.delta_rad_per_us, d.config.control_schedule()), 0.0),
                                             d.config.beta());
  const double refit = uhlmann_fidelity(simulate_prep(p.controls, PrepChannel{d.config.gamma_eff_rad_per_us}).states.back(),
                                        target);
  const double mismatch = std::abs(refit - p.fidelity);
  r.passed = p.fidelity >= 0.99 && p.episodes_used <= 500 && p.controls.n_steps() == 13 && mismatch <= 1e-10 &&
             r.seconds < 60;
  r.measured = "F = " + fixed(p.fidelity, 6) + " after " + std::to_string(p.episodes_used) + " episodes of " +
               std::to_string(p.controls.n_steps()) + " steps; re-simulation mismatch " + sci(mismatch);
  r.tolerance = "F >= 0.99, <= 500 episodes, mismatch <= 1e-10, runtime < 60 s";
  return r;
}

CriterionResult tomography_statistics(Context&) {
  CriterionResult r = titled(9, "tomography round trip and shot-noise statistics");
  const auto start = Clock::now();
  std::mt19937_64 rng(20240917);
  double round_trip = 0;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = qubit_state(random_in_ball(rng));
    std::vector<MeasurementRecord> recs;
    for (Basis b : {Basis::x, Basis::y, Basis::z}) recs.push_back(measure_populations(rho, b, Shots::exact(), 0));
    round_trip = std::max(round_trip, trace_distance(reconstruct_density(stokes_from_records(recs)), rho));
  }

  constexpr std::int64_t kShots = 50000;
  constexpr int kRepeats = 200;
  const Eigen::Vector3d truth(0.3, -0.5, 0.6);
  const DensityMatrix rho = qubit_state(truth);
  double ratio_lo = std::numeric_limits<double>::infinity();
  double ratio_hi = 0;
  int component = 0;
  for (Basis b : {Basis::x, Basis::y, Basis::z}) {
    double sum = 0, sum_sq = 0;
    for (int rep = 0; rep < kRepeats; ++rep) {
      const double s = 2 * measure_populations(rho, b, Shots::count(kShots), 1000 + std::uint64_t(rep)).p_hat - 1;
      sum += s;
      sum_sq += s * s;
    }
    const double mean = sum / kRepeats;
    const double std_dev = std::sqrt((sum_sq - kRepeats * mean * mean) / (kRepeats - 1));
    const double p = (1 + truth(component++)) / 2;
    const double predicted = 2 * std::sqrt(p * (1 - p) / double(kShots));
    ratio_lo = std::min(ratio_lo, std_dev / predicted);
    ratio_hi = std::max(ratio_hi, std_dev / predicted);
  }
  r.seconds = seconds_since(start);
  r.passed = round_trip < 1e-12 && ratio_lo >= 0.5 && ratio_hi <= 2.0;
  r.measured = "EXACT round trip " + sci(round_trip) + "; std/predicted in [" + fixed(ratio_lo, 3) + ", " +
               fixed(ratio_hi, 3) + "]";
  r.tolerance = "< 1e-12; within [0.5, 2]";
  return r;
}

CriterionResult numerics(Context& ctx) {
  CriterionResult r = titled(10, "numerical hygiene (purity, trace, positivity, grid halving)");
  const auto start = Clock::now();

  double purity_drift = 0;
  for (Scenario s : {Scenario::fig2, Scenario::fig3, Scenario::sm_lz_linear, Scenario::sm_example1}) {
    const ScenarioData d = simulate_scenario(config_for(s));
    const double p0 = d.trajectory->states.front().purity();
    for (const DensityMatrix& rho : d.trajectory->states) purity_drift = std::max(purity_drift, std::abs(rho.purity() - p0));
  }

  double trace_drift = 0;
  double min_eig = std::numeric_limits<double>::infinity();
  auto scan = [&](const Trajectory& traj) {
    for (const DensityMatrix& rho : traj.states) {
      trace_drift = std::max(trace_drift, rho.trace_error());
      min_eig = std::min(min_eig, rho.min_eigenvalue());
    }
  };
  if (!ctx.prep) ctx.prep = simulate_scenario(config_for(Scenario::prep)).prep;
  scan(simulate_prep(ctx.prep->controls, PrepChannel{}));
  {
    const ScenarioConfig c = config_for(Scenario::fig2);
    const LZParams lz(c.delta_rad_per_us, c.control_schedule());
    LindbladModel model{[lz](double t) { return transitionless_hamiltonian(lz, t); }, pauli::lowering(),
                        c.gamma_eff_rad_per_us};
    scan(propagate_lindblad(model, DensityMatrix::from_pure(instantaneous_eigensystem(lz, 0).psi_plus), c.grid));
  }

  ScenarioConfig coarse = config_for(Scenario::fig2);
  ScenarioConfig fine = coarse;
  fine.grid.substeps_per_output *= 2;
  const ScenarioData a = simulate_scenario(coarse);
  const ScenarioData b = simulate_scenario(fine);
  double change = 0;
  const MetricsSeries& ma = *a.metrics;
  const MetricsSeries& mb = *b.metrics;
  auto diff = [&](double x, double y) { change = std::max(change, std::abs(x - y)); };
  for (std::size_t i = 0; i < ma.size(); ++i) {
    for (int k = 0; k < 3; ++k) diff(ma.bloch[i](k), mb.bloch[i](k));
    diff(ma.purity[i], mb.purity[i]);
    diff(ma.speed[i], mb.speed[i]);
    diff(ma.tightness_residual[i], mb.tightness_residual[i]);
    if (ma.cost_rate[i] && mb.cost_rate[i]) diff(*ma.cost_rate[i], *mb.cost_rate[i]);
    if (ma.ratio[i] && mb.ratio[i]) diff(*ma.ratio[i], *mb.ratio[i]);
    for (std::size_t s = 0; s < ma.vqsl.size(); ++s) diff(ma.vqsl[s].second[i], mb.vqsl[s].second[i]);
  }
  const RunSummary sa = summarize(a);
  const RunSummary sb = summarize(b);
  bool same_shape = sa.tightness_times.size() == sb.tightness_times.size() && sa.peak_times.size() == sb.peak_times.size();
  if (same_shape) {
    for (std::size_t i = 0; i < sa.tightness_times.size(); ++i) diff(sa.tightness_times[i], sb.tightness_times[i]);
    for (std::size_t i = 0; i < sa.peak_times.size(); ++i) diff(sa.peak_times[i].second, sb.peak_times[i].second);
    if (sa.max_ratio && sb.max_ratio) diff(*sa.max_ratio, *sb.max_ratio);
    diff(*sa.min_tracking_fidelity, *sb.min_tracking_fidelity);
  }

  r.seconds = seconds_since(start);
  r.passed = purity_drift < 1e-10 && trace_drift < 1e-10 && min_eig >= -1e-9 && same_shape && change < 1e-6;
  r.measured = "purity drift " + sci(purity_drift) + ", Lindblad trace drift " + sci(trace_drift) + ", min eigenvalue " +
               sci(min_eig) + ", grid-halving change " + sci(change);
  r.tolerance = "< 1e-10, < 1e-10, >= -1e-09, < 1e-06";
  return r;
}

}  // namespace

bool AcceptanceReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.measured << " (required "
     << r.tolerance << "; " << fixed(r.seconds, 2) << " s)";
  return os.str();
}

AcceptanceReport run_acceptance(std::ostream& log, const std::vector<int>& only) {
  const std::vector<Check> checks{tradeoff_identity,   bound_chain,           tightness_locations, peak_position,
                                  prior_nontightness,  phase_space_oracles,   transitionless_driving,
                                  thermal_preparation, tomography_statistics, numerics};
  Context ctx;
  AcceptanceReport report;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const int id = int(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    CriterionResult r;
    try {
      r = checks[i](ctx);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "criterion " + std::to_string(id);
      r.passed = false;
      r.measured = std::string("error: ") + e.what();
      r.tolerance = "completes without error";
    }
    log << format_result_line(r) << std::endl;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace qslkit::harness
