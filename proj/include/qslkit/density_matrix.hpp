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

#include <sstream>
#include <string>
#include <utility>

#include "qslkit/linalg.hpp"

namespace qslkit {

/// Tolerances a matrix must meet to be accepted as a quantum state.
struct StateTolerance {
  static constexpr double trace = 1e-10;
  static constexpr double hermiticity = 1e-12;
  static constexpr double min_eigenvalue = -1e-9;
};

/// Hermitian, unit-trace, positive semidefinite operator. Immutable once built.
template <typename Real>
class DensityMatrixT {
 public:
  using Matrix = ComplexMatrixT<Real>;
  using Vector = ComplexVectorT<Real>;

  /// Validates all three invariants; throws NotAState on violation.
  static DensityMatrixT from_matrix(Matrix m) {
    if (m.rows() != m.cols() || m.rows() < 1)
      throw NotAState("density matrix must be square and non-empty");
    if (!all_finite(m)) throw NotAState("density matrix has non-finite entries");
    const Real herm = hermitian_defect(m);
    if (herm >= Real(StateTolerance::hermiticity)) {
      std::ostringstream os;
      os << "density matrix not Hermitian (defect " << herm << ")";
      throw NotAState(os.str());
    }
    const Real tr_err = std::abs(m.trace() - std::complex<Real>(1));
    if (tr_err > Real(StateTolerance::trace)) {
      std::ostringstream os;
      os << "density matrix trace off by " << tr_err;
      throw NotAState(os.str());
    }
    const Real lmin = hermitian_eigenvalues(m).minCoeff();
    if (lmin < Real(StateTolerance::min_eigenvalue)) {
      std::ostringstream os;
      os << "density matrix has negative eigenvalue " << lmin;
      throw NotAState(os.str());
    }
    return DensityMatrixT(std::move(m));
  }

  /// |psi><psi| / <psi|psi>
  static DensityMatrixT from_pure(const Vector& psi) {
    const Real norm2 = psi.squaredNorm();
    if (!(norm2 > 0)) throw NotAState("zero state vector");
    Matrix m = psi * psi.adjoint() / norm2;
    m = (m + m.adjoint()) / Real(2);
    return from_matrix(std::move(m));
  }

  static DensityMatrixT maximally_mixed(Eigen::Index n) {
    if (n < 1) throw InvalidArgument("maximally_mixed: dimension must be positive");
    return DensityMatrixT(Matrix::Identity(n, n) / Real(n));
  }

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  Real purity() const { return std::real((m_ * m_).trace()); }
  Real min_eigenvalue() const { return hermitian_eigenvalues(m_).minCoeff(); }
  Real trace_error() const { return std::abs(m_.trace() - std::complex<Real>(1)); }

 private:
  explicit DensityMatrixT(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

using DensityMatrix = DensityMatrixT<double>;

/// Half the trace norm of rho - sigma.
template <typename Real>
Real trace_distance(const DensityMatrixT<Real>& rho, const DensityMatrixT<Real>& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidArgument("trace_distance: dimension mismatch");
  const ComplexMatrixT<Real> diff = rho.matrix() - sigma.matrix();
  return hermitian_eigenvalues(diff).cwiseAbs().sum() / Real(2);
}

}  // namespace qslkit
