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

#include "qslkit/lz_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qslkit/io.hpp"

namespace qslkit {

namespace {

constexpr double kDegenerateEnergy = 1e-14;

void require_positive_tau(double tau) {
  if (!(tau > 0) || !std::isfinite(tau)) throw InvalidArgument("schedule duration tau must be positive and finite");
}

double spectral_gap_half(double delta, double g) {
  const double e = std::hypot(delta, g);
  if (e <= kDegenerateEnergy) throw DegenerateSpectrum("Landau-Zener spectrum is degenerate (Delta = g = 0)");
  return e;
}

}  // namespace

ControlSchedule ControlSchedule::cosine(double omega0, double tau) {
  require_positive_tau(tau);
  if (!std::isfinite(omega0)) throw InvalidArgument("cosine schedule: omega0 must be finite");
  ControlSchedule s;
  s.kind_ = Kind::cosine;
  s.tau_ = tau;
  s.p0_ = omega0;
  return s;
}

ControlSchedule ControlSchedule::linear(double a, double b, double tau) {
  require_positive_tau(tau);
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("linear schedule: a and b must be finite");
  ControlSchedule s;
  s.kind_ = Kind::linear;
  s.tau_ = tau;
  s.p0_ = a;
  s.p1_ = b;
  return s;
}

ControlSchedule ControlSchedule::table(std::vector<double> times, std::vector<double> values) {
  if (times.size() < 2 || times.size() != values.size())
    throw InvalidArgument("table schedule needs at least two (time, value) samples");
  if (times.front() != 0) throw InvalidArgument("table schedule must start at t = 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw InvalidArgument("table schedule times must increase strictly");
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidArgument("table schedule values must be finite");
  ControlSchedule s;
  s.kind_ = Kind::table;
  s.tau_ = times.back();
  require_positive_tau(s.tau_);
  s.knots_ = std::move(times);
  s.values_ = std::move(values);
  return s;
}

DriveSample ControlSchedule::eval(double t) const {
  const double slack = 1e-12 * tau_;
  if (!(t >= -slack && t <= tau_ + slack)) {
    std::ostringstream os;
    os << "schedule evaluated at t=" << t << " outside [0, " << tau_ << "]";
    throw RangeError(os.str());
  }
  t = std::clamp(t, 0.0, tau_);
  switch (kind_) {
    case Kind::cosine: {
      const double w = std::numbers::pi / tau_;
      return {0.5 * p0_ * std::cos(w * t), -0.5 * p0_ * w * std::sin(w * t)};
    }
    case Kind::linear:
      return {p0_ - p1_ * t / tau_, -p1_ / tau_};
    case Kind::table: {
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
      std::size_t hi = std::size_t(it - knots_.begin());
      if (hi >= knots_.size()) hi = knots_.size() - 1;
      const std::size_t lo = hi - 1;
      const double slope = (values_[hi] - values_[lo]) / (knots_[hi] - knots_[lo]);
      return {values_[lo] + slope * (t - knots_[lo]), slope};
    }
  }
  return {};
}

LZParams::LZParams(double d, ControlSchedule s) : delta(d), schedule(std::move(s)) {
  if (!(delta >= 0) || !std::isfinite(delta)) throw InvalidArgument("LZParams: delta must be finite and >= 0");
}

ComplexMatrix h0(const LZParams& lz, double t) {
  const DriveSample d = lz.schedule.eval(t);
  return pauli::combine(0.0, lz.delta, 0.0, d.g);
}

Eigensystem instantaneous_eigensystem(const LZParams& lz, double t) {
  const DriveSample d = lz.schedule.eval(t);
  Eigensystem es;
  es.energy = spectral_gap_half(lz.delta, d.g);
  es.theta = 0.5 * std::atan2(lz.delta, d.g);
  const double c = std::cos(es.theta);
  const double s = std::sin(es.theta);
  es.psi_plus = ComplexVector(2);
  es.psi_plus << c, s;
  es.psi_minus = ComplexVector(2);
  es.psi_minus << s, -c;
  return es;
}

double counterdiabatic_coefficient(const LZParams& lz, double t) {
  const DriveSample d = lz.schedule.eval(t);
  const double e = spectral_gap_half(lz.delta, d.g);
  return -lz.delta * d.gprime / (2 * e * e);
}

double mixing_angle_rate(const LZParams& lz, double t) {
  const DriveSample d = lz.schedule.eval(t);
  const double e = spectral_gap_half(lz.delta, d.g);
  if (lz.delta == 0) return 0;
  // d/dt cos(2 theta) = d/dt (g/E) = g' Delta^2 / E^3, and sin(2 theta) = Delta / E.
  const double dcos = d.gprime * lz.delta * lz.delta / (e * e * e);
  const double sin2 = lz.delta / e;
  return -0.5 * dcos / sin2;
}

ComplexMatrix counterdiabatic_h1(const LZParams& lz, double t) {
  const double xi = counterdiabatic_coefficient(lz, t);
  const double rate = mixing_angle_rate(lz, t);
  if (std::abs(xi - rate) > 1e-12 * std::max(1.0, std::abs(xi))) {
    std::ostringstream os;
    os << "counterdiabatic coefficient " << xi << " disagrees with mixing-angle rate " << rate << " at t=" << t;
    throw NumericalFailure(os.str());
  }
  return pauli::combine(0.0, 0.0, xi, 0.0);
}

ComplexMatrix transitionless_hamiltonian(const LZParams& lz, double t) {
  const DriveSample d = lz.schedule.eval(t);
  const double xi = counterdiabatic_coefficient(lz, t);
  return pauli::combine(0.0, lz.delta, xi, d.g);
}

ComplexMatrix EffectiveControls::hamiltonian() const {
  return pauli::combine(0.0, omega_eff * std::cos(phase_eff), -omega_eff * std::sin(phase_eff), detuning);
}

EffectiveControls effective_controls(const LZParams& lz, double t) {
  EffectiveControls c;
  c.xi = counterdiabatic_coefficient(lz, t);
  c.detuning = lz.schedule.eval(t).g;
  c.omega_eff = std::hypot(lz.delta, c.xi);
  c.phase_eff = c.omega_eff > 0 ? std::atan2(-c.xi, lz.delta) : 0.0;
  return c;
}

ComplexMatrix PulseStep::hamiltonian() const {
  return pauli::combine(0.0, omega_eff * std::cos(phase_eff), -omega_eff * std::sin(phase_eff), detuning);
}

double PulseSequence::total_duration() const {
  double sum = 0;
  for (const auto& s : steps) sum += s.duration;
  return sum;
}

PulseSequence discretize(const LZParams& lz, int n_steps) {
  if (n_steps < 1) throw InvalidArgument("discretize: n_steps must be >= 1");
  const double dt = lz.tau() / n_steps;
  PulseSequence seq;
  seq.steps.reserve(std::size_t(n_steps));
  for (int k = 0; k < n_steps; ++k) {
    const EffectiveControls c = effective_controls(lz, (k + 0.5) * dt);
    seq.steps.push_back({dt, c.omega_eff, c.phase_eff, c.detuning});
  }
  return seq;
}

void write_pulse_csv(std::ostream& os, const PulseSequence& seq) {
  io::write_csv_row(os, {"step_index", "duration_us", "omega_eff_rad_per_us", "phase_eff_rad", "detuning_rad_per_us"});
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const PulseStep& s = seq.steps[k];
    io::write_csv_row(os, {std::to_string(k), io::format_double(s.duration), io::format_double(s.omega_eff),
                           io::format_double(s.phase_eff), io::format_double(s.detuning)});
  }
}

}  // namespace qslkit
