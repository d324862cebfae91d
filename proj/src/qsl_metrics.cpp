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

#include "qslkit/qsl_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qslkit/io.hpp"
#include "qslkit/quadrature.hpp"

namespace qslkit {

namespace {

const GeneratorSet& qubit_generators() {
  static const GeneratorSet gens = su_generators<double>(2);
  return gens;
}

const StructureConstants& qubit_structure_constants() {
  static const StructureConstants f = structure_constants(qubit_generators());
  return f;
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.dim() != b.dim()) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

void require_qubit_vector(const RealVector& v, const char* what) {
  if (v.size() != 3) throw InvalidArgument(std::string(what) + ": expected a 3-component qubit vector");
}

Eigen::Vector3d cross(const RealVector& a, const RealVector& b) {
  return Eigen::Vector3d(a(0), a(1), a(2)).cross(Eigen::Vector3d(b(0), b(1), b(2)));
}

double r_s(double s) { return std::sqrt(std::pow(3.0, 1.0 + s)) / 2; }

void check_oracle_inputs(const DensityMatrix& rho0, const DensityMatrix& rhot, SParameter s, int order) {
  if (rho0.dim() != 2 || rhot.dim() != 2) throw InvalidArgument("phase-space oracles are implemented for qubits");
  if (s.is_neg_inf() || std::abs(s.value()) > 20)
    throw InvalidArgument("phase-space oracles need a finite s with |s| <= 20");
  if (order < 8)
    throw InvalidArgument("quadrature order below 8 cannot resolve the integrand; use order >= 8 (default 64)");
}

}  // namespace

double relative_purity(const DensityMatrix& rho0, const DensityMatrix& rhot) {
  require_same_dim(rho0, rhot, "relative_purity");
  return (rho0.matrix() * rhot.matrix()).trace().real();
}

double speed(const DensityMatrix& rho0, const ComplexMatrix& h, const DensityMatrix& rhot) {
  require_same_dim(rho0, rhot, "speed");
  if (h.rows() != rho0.dim() || h.cols() != rho0.dim()) throw InvalidArgument("speed: Hamiltonian dimension mismatch");
  if (!is_hermitian(h, 1e-12)) throw InvalidArgument("speed: Hamiltonian is not Hermitian");
  const ComplexMatrix comm = h * rhot.matrix() - rhot.matrix() * h;
  return std::abs((rho0.matrix() * comm).trace());
}

double cost_rate(const LZParams& lz, double t) {
  const double via_angle = std::sqrt(2.0) * std::abs(mixing_angle_rate(lz, t));
  const double via_norm = counterdiabatic_h1(lz, t).norm();
  if (std::abs(via_angle - via_norm) > 1e-12 * std::max(1.0, via_angle)) {
    std::ostringstream os;
    os << "cost_rate: Frobenius path " << via_norm << " disagrees with eigenstate path " << via_angle << " at t=" << t;
    throw NumericalFailure(os.str());
  }
  return via_angle;
}

double vqsl_qubit(SParameter s, const RealVector& b0, const RealVector& h, const RealVector& b) {
  require_qubit_vector(b0, "vqsl_qubit");
  require_qubit_vector(h, "vqsl_qubit");
  require_qubit_vector(b, "vqsl_qubit");
  return 0.5 * std::sqrt(s.pow3() + b0.squaredNorm()) * cross(h, b).norm();
}

double vqsl_eigenstate(SParameter s, const LZParams& lz, double t) {
  return std::sqrt(s.pow3() + 1) * std::abs(mixing_angle_rate(lz, t));
}

double tradeoff_ratio(SParameter s) { return std::sqrt(s.pow3() + 1) / std::sqrt(2.0); }

double tightness_residual(const RealVector& b0, const RealVector& h, const RealVector& b, const StructureConstants& f) {
  const int n = f.count();
  if (b0.size() != n || h.size() != n || b.size() != n)
    throw InvalidArgument("tightness_residual: vector length does not match structure constants");
  const double b0n = b0.norm();
  if (b0n == 0) throw InvalidArgument("tightness_residual: initial Bloch vector is zero");
  RealVector r = RealVector::Zero(n);
  for (int nu = 0; nu < n; ++nu) {
    if (h(nu) == 0) continue;
    for (int la = 0; la < n; ++la) {
      if (b(la) == 0) continue;
      const double hb = h(nu) * b(la);
      for (int mu = 0; mu < n; ++mu) r(mu) += hb * f(nu, la, mu);
    }
  }
  const double rn = r.norm();
  if (rn < 1e-14) return kResidualUndefined;
  const double c = std::min(1.0, std::abs(b0.dot(r)) / (b0n * rn));
  return 1 - c;
}

const std::vector<double>& MetricsSeries::vqsl_for(SParameter s) const {
  for (const auto& [key, values] : vqsl)
    if (key == s) return values;
  throw InvalidArgument("metrics series has no column for s=" + s.label());
}

MetricsSeries compute_metrics(const Trajectory& traj, const HamiltonianFn& hamiltonian, const CostRateFn& cost,
                              const std::vector<SParameter>& s_list) {
  if (traj.size() == 0) throw InvalidArgument("compute_metrics: empty trajectory");
  if (traj.states.front().dim() != 2) throw InvalidArgument("compute_metrics: qubit trajectories only");
  const StructureConstants& f = qubit_structure_constants();
  const DensityMatrix& rho0 = traj.states.front();
  const RealVector b0 = bloch_vector(rho0);

  MetricsSeries m;
  const std::size_t n = traj.size();
  m.times = traj.times;
  m.bloch.reserve(n);
  m.purity.reserve(n);
  m.speed.reserve(n);
  m.cost_rate.reserve(n);
  m.ratio.reserve(n);
  m.tightness_residual.reserve(n);
  for (const SParameter& s : s_list) m.vqsl.emplace_back(s, std::vector<double>{});

  for (std::size_t i = 0; i < n; ++i) {
    const double t = traj.times[i];
    const DensityMatrix& rho = traj.states[i];
    const ComplexMatrix h = hamiltonian(t);
    const RealVector b = bloch_vector(rho);
    const RealVector hv = bloch_vector(h);

    m.bloch.emplace_back(b(0), b(1), b(2));
    m.purity.push_back(relative_purity(rho0, rho));
    const double v = speed(rho0, h, rho);
    m.speed.push_back(v);
    std::optional<double> c;
    if (cost) c = cost(t);
    m.cost_rate.push_back(c);
    if (c && *c >= 1e-12)
      m.ratio.push_back(v / *c);
    else
      m.ratio.push_back(std::nullopt);
    for (auto& [s, values] : m.vqsl) values.push_back(vqsl_qubit(s, b0, hv, b));
    m.tightness_residual.push_back(tightness_residual(b0, hv, b, f));
  }
  return m;
}

TradeoffSeries empirical_tradeoff(const MetricsSeries& series) {
  TradeoffSeries out;
  bool any = false;
  for (const auto& c : series.cost_rate)
    if (c && *c >= 1e-12) any = true;
  if (!any) {
    out.diagnostic = "cost rate vanishes (or is undefined) at every point; trade-off ratio is undefined";
    return out;
  }
  out.ratio.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& c = series.cost_rate[i];
    if (c && *c >= 1e-12)
      out.ratio.push_back(series.speed[i] / *c);
    else
      out.ratio.push_back(std::nullopt);
  }
  return out;
}

std::vector<double> locate_tightness(const MetricsSeries& series, double tol) {
  std::vector<double> out;
  const auto& r = series.tightness_residual;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (!(r[i] < tol)) continue;
    if (r[i] <= r[i - 1] && r[i] < r[i + 1]) out.push_back(series.times[i]);
  }
  return out;
}

std::optional<double> prior_vqsl_value(double energy, double theta_rate, double angle) {
  constexpr double kSingular = 1e-6;
  if (angle < kSingular || std::abs(angle - std::numbers::pi / 2) < kSingular) return std::nullopt;
  return std::sqrt(energy * energy + theta_rate * theta_rate) / (std::cos(angle) * std::sin(angle));
}

PriorQsl prior_vqsl(const LZParams& lz, const Trajectory& traj) {
  if (traj.size() == 0) throw InvalidArgument("prior_vqsl: empty trajectory");
  for (std::size_t i = 0; i < traj.size(); ++i)
    if (std::abs(traj.states[i].purity() - 1) > 1e-6)
      throw InvalidArgument("prior_vqsl: the angle metric is defined for pure states only");
  const DensityMatrix& rho0 = traj.states.front();
  PriorQsl out;
  out.times = traj.times;
  const std::size_t n = traj.size();
  out.angle.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double overlap = std::sqrt(std::clamp(relative_purity(rho0, traj.states[i]), 0.0, 1.0));
    out.angle.push_back(std::acos(std::min(1.0, overlap)));
  }
  out.angle_rate.resize(n);
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t lo = i == 0 ? 0 : i - 1;
      const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
      out.angle_rate[i] = std::abs((out.angle[hi] - out.angle[lo]) / (out.times[hi] - out.times[lo]));
    }
  }
  out.v_qsl.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = out.times[i];
    const Eigensystem es = instantaneous_eigensystem(lz, t);
    out.v_qsl.push_back(prior_vqsl_value(es.energy, mixing_angle_rate(lz, t), out.angle[i]));
  }
  return out;
}

double phase_space_purity_oracle(const DensityMatrix& rho0, const DensityMatrix& rhot, SParameter s, int order) {
  check_oracle_inputs(rho0, rhot, s, order);
  const SphereRule rule = sphere_rule(order, 2 * order);
  const Eigen::Vector3d b0 = bloch_vector(rho0);
  const Eigen::Vector3d bt = bloch_vector(rhot);
  const double r_minus = r_s(-s.value());
  const double r_plus = r_s(s.value());
  double acc = 0;
  for (std::size_t k = 0; k < rule.points.size(); ++k) {
    const Eigen::Vector3d& n = rule.points[k];
    const double f0 = 0.5 + r_minus * b0.dot(n);
    const double ft = 0.5 + r_plus * bt.dot(n);
    acc += rule.weights[k] * f0 * ft;
  }
  return acc / (2 * std::numbers::pi);
}

double vqsl_quadrature_oracle(const DensityMatrix& rho0, const ComplexMatrix& h, const DensityMatrix& rhot,
                              SParameter s, int order) {
  check_oracle_inputs(rho0, rhot, s, order);
  if (h.rows() != 2 || h.cols() != 2 || !is_hermitian(h, 1e-12))
    throw InvalidArgument("vqsl_quadrature_oracle: H must be a Hermitian 2x2 matrix");
  const GeneratorSet& gens = qubit_generators();
  const StructureConstants& f = qubit_structure_constants();
  const RealVector b0 = bloch_coeffs(rho0, gens);
  const RealVector bt = bloch_coeffs(rhot, gens);
  const RealVector hv = bloch_coeffs(h, gens);

  // Contract b_mu h_nu f_{nu mu lambda} once; the integrand is linear in R.
  Eigen::Vector3d w = Eigen::Vector3d::Zero();
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu)
      for (int la = 0; la < 3; ++la) w(la) += bt(mu) * hv(nu) * f(nu, mu, la);

  const SphereRule rule = sphere_rule(order, 2 * order);
  const double r_minus = r_s(-s.value());
  const double r_plus = r_s(s.value());
  double norm_initial = 0;
  double norm_flow = 0;
  for (std::size_t k = 0; k < rule.points.size(); ++k) {
    const Eigen::Vector3d& n = rule.points[k];
    const Eigen::Vector3d big_r = n / 2;
    const double f0 = 0.5 + 2 * r_minus * Eigen::Vector3d(b0(0), b0(1), b0(2)).dot(big_r);
    const double flow = 2 * r_plus * w.dot(big_r);
    norm_initial += rule.weights[k] * f0 * f0;
    norm_flow += rule.weights[k] * flow * flow;
  }
  const double measure = 2 * std::numbers::pi;
  return std::sqrt(norm_initial / measure) * std::sqrt(norm_flow / measure);
}

void write_metrics_csv(std::ostream& os, const MetricsSeries& series) {
  std::vector<std::string> header = {"t_us", "bx", "by", "bz", "purity_P", "speed_absPdot", "cost_rate"};
  for (const auto& [s, values] : series.vqsl) header.push_back("vqsl_s" + s.label());
  header.push_back("ratio_speed_over_cost");
  header.push_back("tightness_residual");
  io::write_csv_row(os, header);
  std::vector<std::string> row;
  for (std::size_t i = 0; i < series.size(); ++i) {
    row.clear();
    row.push_back(io::format_double(series.times[i]));
    for (int k = 0; k < 3; ++k) row.push_back(io::format_double(series.bloch[i](k)));
    row.push_back(io::format_double(series.purity[i]));
    row.push_back(io::format_double(series.speed[i]));
    row.push_back(io::format_optional(series.cost_rate[i]));
    for (const auto& [s, values] : series.vqsl) row.push_back(io::format_double(values[i]));
    row.push_back(io::format_optional(series.ratio[i]));
    row.push_back(io::format_double(series.tightness_residual[i]));
    io::write_csv_row(os, row);
  }
}

}  // namespace qslkit
