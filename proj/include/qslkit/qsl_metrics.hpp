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

// Speed, cost and speed-limit functionals (hbar = 1).
//
//   relative purity   P_t     = tr(rho_0 rho_t)
//   speed             |P_t'|  = |tr(rho_0 [H, rho_t])|
//   cost rate         dC/dt   = ||H_1||_F = sqrt(2) |theta'|
//   qubit bound       V^s     = (1/2) sqrt(3^s + |b_0|^2) |h x b|
//
// For qubits the bound is smallest at s = -infinity, where it reduces to
// |b_0||h x b|/2 and is attained whenever b_0 is parallel to h x b.

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qslkit/density_matrix.hpp"
#include "qslkit/dynamics.hpp"
#include "qslkit/generators.hpp"
#include "qslkit/lz_model.hpp"
#include "qslkit/s_parameter.hpp"

namespace qslkit {

double relative_purity(const DensityMatrix& rho0, const DensityMatrix& rhot);
double speed(const DensityMatrix& rho0, const ComplexMatrix& h, const DensityMatrix& rhot);

/// sqrt(2)|theta'(t)|, checked against the Frobenius norm of H1 to 1e-12.
double cost_rate(const LZParams& lz, double t);

double vqsl_qubit(SParameter s, const RealVector& b0, const RealVector& h, const RealVector& b);
/// sqrt(3^s + 1) |theta'(t)|: the bound along an ideal transitionless
/// trajectory started in an instantaneous eigenstate.
double vqsl_eigenstate(SParameter s, const LZParams& lz, double t);
/// sqrt(3^s + 1) / sqrt(2)
double tradeoff_ratio(SParameter s);

/// 1 - |<b0, r>| / (|b0||r|) with r_mu = h_nu b_lambda f_{nu lambda mu}.
/// Returns 2 when |r| < 1e-14 (no direction to align with).
double tightness_residual(const RealVector& b0, const RealVector& h, const RealVector& b, const StructureConstants& f);
inline constexpr double kResidualUndefined = 2.0;

struct MetricsSeries {
  std::vector<double> times;
  std::vector<Eigen::Vector3d> bloch;
  std::vector<double> purity;
  std::vector<double> speed;
  std::vector<std::optional<double>> cost_rate;
  std::vector<std::pair<SParameter, std::vector<double>>> vqsl;
  std::vector<std::optional<double>> ratio;  ///< speed / cost_rate
  std::vector<double> tightness_residual;

  std::size_t size() const { return times.size(); }
  const std::vector<double>& vqsl_for(SParameter s) const;
};

using CostRateFn = std::function<double(double)>;

/// Evaluates every metric at each trajectory point. cost may be empty when
/// the drive has no counterdiabatic part (cost and ratio are then undefined).
MetricsSeries compute_metrics(const Trajectory& traj, const HamiltonianFn& hamiltonian, const CostRateFn& cost,
                              const std::vector<SParameter>& s_list);

struct TradeoffSeries {
  std::vector<std::optional<double>> ratio;
  std::string diagnostic;
};

/// Pointwise |P'|/dC; points with dC < 1e-12 are undefined.
TradeoffSeries empirical_tradeoff(const MetricsSeries& series);

/// Local minima of the residual below tol (interior grid points only).
std::vector<double> locate_tightness(const MetricsSeries& series, double tol = 1e-4);

/// Angle metric L_t = arccos|<psi_0|psi_t>| and its speed limit
///   v = sqrt(eps^2 + <dn|dn>) / (cos L sin L).
struct PriorQsl {
  std::vector<double> times;
  std::vector<double> angle;                    ///< L_t, rad
  std::vector<std::optional<double>> angle_rate;  ///< |dL/dt| by central differences
  std::vector<std::optional<double>> v_qsl;       ///< undefined near L = 0 or pi/2
};

/// Single-point bound; nullopt within 1e-6 of the singular angles.
std::optional<double> prior_vqsl_value(double energy, double theta_rate, double angle);
/// Requires pure states (purity within 1e-6 of 1) along the trajectory.
PriorQsl prior_vqsl(const LZParams& lz, const Trajectory& traj);

/// Quadrature of int dmu F^{-s}_{rho0} F^{s}_{rhot} over spin-coherent
/// states with dmu = dOmega/(2 pi) and F^s(n) = 1/2 + r_s b.n,
/// r_s = sqrt(3^{1+s})/2. order is the polar Gauss-Legendre order (>= 8);
/// the azimuth uses 2*order points.
double phase_space_purity_oracle(const DensityMatrix& rho0, const DensityMatrix& rhot, SParameter s,
                                 int order = 64);

/// Quadrature form of V^s: ||F^{-s}_{rho0}|| * ||(2 r_s) b_mu h_nu R_lambda f_{nu mu lambda}||
/// with R = n/2, using the SU(2) structure constants directly.
double vqsl_quadrature_oracle(const DensityMatrix& rho0, const ComplexMatrix& h, const DensityMatrix& rhot,
                              SParameter s, int order = 64);

/// t_us, bx, by, bz, purity_P, speed_absPdot, cost_rate, vqsl_s{label}..., ratio_speed_over_cost, tightness_residual
void write_metrics_csv(std::ostream& os, const MetricsSeries& series);

}  // namespace qslkit
