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

// Three-basis qubit tomography with finite shots.
//
// A measurement in basis b first applies a carrier pulse
//   U(theta, phi) = exp(-i theta/2 (cos(phi) sigma_x + sin(phi) sigma_y))
// that carries the +1 eigenstate of sigma_b onto |e>, then counts |e>:
//   x: theta = pi/2, phi = -pi/2
//   y: theta = pi/2, phi = 0
//   z: no pulse
// so that P_e = (1 + S_b)/2 in every basis.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qslkit/density_matrix.hpp"

namespace qslkit {

enum class Basis { x, y, z };

std::string to_string(Basis b);
Basis parse_basis(const std::string& text);

/// Shot budget per basis: a positive count or the infinite-shot token.
class Shots {
 public:
  static Shots exact() { return Shots(0); }
  static Shots count(std::int64_t n) {
    if (n <= 0) throw InvalidArgument("shots must be >= 1 (or EXACT)");
    return Shots(n);
  }
  bool is_exact() const { return n_ == 0; }
  std::int64_t value() const { return n_; }
  std::string label() const { return is_exact() ? std::string("EXACT") : std::to_string(n_); }

  friend bool operator==(Shots, Shots) = default;

 private:
  explicit Shots(std::int64_t n) : n_(n) {}
  std::int64_t n_;
};

struct MeasurementRecord {
  Basis basis = Basis::z;
  Shots shots = Shots::exact();
  std::int64_t excited_counts = 0;  ///< 0 for EXACT records
  double p_hat = 0;                 ///< counts/shots, or the exact probability
  std::uint64_t seed = 0;
};

struct StokesVector {
  double sx = 0, sy = 0, sz = 0;

  double norm() const;
  double operator[](Basis b) const;
};

ComplexMatrix analysis_rotation(Basis basis);

/// Binomial(shots, p_e) with a generator seeded from (seed, basis).
MeasurementRecord measure_populations(const DensityMatrix& rho, Basis basis, Shots shots, std::uint64_t seed);

/// One record per basis, in any order. Throws InvalidArgument when a basis is
/// missing or repeated.
StokesVector stokes_from_records(const std::vector<MeasurementRecord>& records);

/// (I + S.sigma)/2, with S scaled back to the unit sphere when |S| > 1.
DensityMatrix reconstruct_density(const StokesVector& s);

struct TomographyPoint {
  double t_us = 0;
  std::array<MeasurementRecord, 3> records;
};

/// t_us, basis, shots, p_hat, stokes_component
void write_tomography_csv(std::ostream& os, const std::vector<TomographyPoint>& points);

}  // namespace qslkit
