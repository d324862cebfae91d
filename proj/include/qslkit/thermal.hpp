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

#include <cmath>
#include <limits>

#include "qslkit/density_matrix.hpp"
#include "qslkit/linalg.hpp"

namespace qslkit {

/// beta in inverse energy units (us/rad with hbar = 1), or exactly +infinity.
class InverseTemperature {
 public:
  static InverseTemperature finite(double beta) {
    if (!std::isfinite(beta) || beta < 0)
      throw InvalidArgument("inverse temperature must be finite and non-negative");
    return InverseTemperature(beta, false);
  }
  static InverseTemperature infinite() { return InverseTemperature(0, true); }

  bool is_infinite() const { return infinite_; }
  double value() const { return infinite_ ? std::numeric_limits<double>::infinity() : beta_; }

 private:
  InverseTemperature(double b, bool inf) : beta_(b), infinite_(inf) {}
  double beta_;
  bool infinite_;
};

/// exp(-beta H)/Z, evaluated as exp(-beta (E - E_ground)) so that huge beta
/// underflows to the ground projector instead of overflowing.
template <typename Real = double>
DensityMatrixT<Real> thermal_state(const ComplexMatrixT<Real>& h, InverseTemperature beta) {
  if (h.rows() != h.cols() || h.rows() == 0) throw InvalidArgument("thermal_state: H must be square");
  if (!is_hermitian(h, Real(1e-12))) throw InvalidArgument("thermal_state: H is not Hermitian");
  using Matrix = ComplexMatrixT<Real>;
  Eigen::SelfAdjointEigenSolver<Matrix> es((h + h.adjoint()) / Real(2));
  const RealVectorT<Real>& e = es.eigenvalues();
  const Eigen::Index n = e.size();

  RealVectorT<Real> weights(n);
  if (beta.is_infinite()) {
    const Real scale = Real(1) + e.cwiseAbs().maxCoeff();
    if (n > 1 && e(1) - e(0) <= Real(1e-12) * scale)
      throw InvalidArgument("thermal_state: ground level is degenerate at infinite beta");
    weights.setZero();
    weights(0) = 1;
  } else {
    const Real b = Real(beta.value());
    for (Eigen::Index i = 0; i < n; ++i) weights(i) = std::exp(-b * (e(i) - e(0)));
    weights /= weights.sum();
  }
  Matrix rho = es.eigenvectors() * weights.template cast<std::complex<Real>>().asDiagonal() *
               es.eigenvectors().adjoint();
  rho = (rho + rho.adjoint()) / Real(2);
  return DensityMatrixT<Real>::from_matrix(std::move(rho));
}

}  // namespace qslkit
