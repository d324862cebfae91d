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

#include "qslkit/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "qslkit/generators.hpp"
#include "qslkit/io.hpp"

namespace qslkit {

namespace {

ComplexMatrix carrier_pulse(double theta, double phi) {
  const ComplexMatrix axis = std::cos(phi) * pauli::x() + std::sin(phi) * pauli::y();
  return matrix_exponential(ComplexMatrix(Complex(0, -theta / 2) * axis));
}

int basis_index(Basis b) { return static_cast<int>(b); }

}  // namespace

std::string to_string(Basis b) {
  switch (b) {
    case Basis::x: return "x";
    case Basis::y: return "y";
    case Basis::z: return "z";
  }
  return "?";
}

Basis parse_basis(const std::string& text) {
  if (text == "x") return Basis::x;
  if (text == "y") return Basis::y;
  if (text == "z") return Basis::z;
  throw InvalidArgument("unknown measurement basis '" + text + "'");
}

double StokesVector::norm() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }

double StokesVector::operator[](Basis b) const {
  switch (b) {
    case Basis::x: return sx;
    case Basis::y: return sy;
    case Basis::z: return sz;
  }
  return 0;
}

ComplexMatrix analysis_rotation(Basis basis) {
  constexpr double half_pi = std::numbers::pi / 2;
  switch (basis) {
    case Basis::x: return carrier_pulse(half_pi, -half_pi);
    case Basis::y: return carrier_pulse(half_pi, 0.0);
    case Basis::z: return pauli::identity();
  }
  throw InvalidArgument("unknown measurement basis");
}

MeasurementRecord measure_populations(const DensityMatrix& rho, Basis basis, Shots shots, std::uint64_t seed) {
  if (rho.dim() != 2) throw InvalidArgument("measure_populations: qubit states only");
  const ComplexMatrix u = analysis_rotation(basis);
  const ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
  const double p = std::clamp(rotated(0, 0).real(), 0.0, 1.0);

  MeasurementRecord rec{basis, shots, 0, p, seed};
  if (shots.is_exact()) return rec;

  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(basis_index(basis))};
  std::mt19937_64 rng(seq);
  std::binomial_distribution<std::int64_t> draw(shots.value(), p);
  rec.excited_counts = draw(rng);
  rec.p_hat = double(rec.excited_counts) / double(shots.value());
  return rec;
}

StokesVector stokes_from_records(const std::vector<MeasurementRecord>& records) {
  std::array<std::optional<double>, 3> s;
  for (const MeasurementRecord& r : records) {
    auto& slot = s[std::size_t(basis_index(r.basis))];
    if (slot) throw InvalidArgument("stokes_from_records: basis " + to_string(r.basis) + " measured twice");
    if (!r.shots.is_exact() && (r.excited_counts < 0 || r.excited_counts > r.shots.value()))
      throw InvalidArgument("stokes_from_records: excited_counts outside [0, shots]");
    slot = 2 * r.p_hat - 1;
  }
  for (Basis b : {Basis::x, Basis::y, Basis::z})
    if (!s[std::size_t(basis_index(b))])
      throw InvalidArgument("stokes_from_records: missing basis " + to_string(b));
  return {*s[0], *s[1], *s[2]};
}

DensityMatrix reconstruct_density(const StokesVector& s) {
  Eigen::Vector3d b(s.sx, s.sy, s.sz);
  const double n = b.norm();
  if (n > 1) b /= n;
  return qubit_state(b);
}

void write_tomography_csv(std::ostream& os, const std::vector<TomographyPoint>& points) {
  io::write_csv_row(os, {"t_us", "basis", "shots", "p_hat", "stokes_component"});
  for (const TomographyPoint& pt : points) {
    for (const MeasurementRecord& r : pt.records) {
      io::write_csv_row(os, {io::format_double(pt.t_us), to_string(r.basis), r.shots.label(),
                             io::format_double(r.p_hat), io::format_double(2 * r.p_hat - 1)});
    }
  }
}

}  // namespace qslkit
