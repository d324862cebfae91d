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

// Dense complex linear algebra shared by every module.
//
// Qubit basis convention: storage index 0 is the excited level |e>, index 1
// is the ground level |g>. With that ordering the textbook Pauli matrices
// satisfy sigma_z|e> = +|e>, sigma_+ = |e><g| and sigma_- = |g><e|, so every
// Bloch sign in the library follows from the standard matrices below.

#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qslkit/errors.hpp"

namespace qslkit {

template <typename Real>
using ComplexMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = ComplexVectorT<double>;
using RealVector = RealVectorT<double>;
using Complex = std::complex<double>;

/// max |A - A^dagger|
template <typename Derived>
typename Derived::RealScalar hermitian_defect(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  typename Derived::RealScalar tol = 1e-12) {
  return a.rows() == a.cols() && hermitian_defect(a) < tol;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const auto z = a(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) return false;
    }
  return true;
}

namespace pauli {

template <typename Real = double>
ComplexMatrixT<Real> identity() {
  return ComplexMatrixT<Real>::Identity(2, 2);
}

template <typename Real = double>
ComplexMatrixT<Real> x() {
  ComplexMatrixT<Real> m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

template <typename Real = double>
ComplexMatrixT<Real> y() {
  using C = std::complex<Real>;
  ComplexMatrixT<Real> m(2, 2);
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Real = double>
ComplexMatrixT<Real> z() {
  ComplexMatrixT<Real> m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// sigma_+ = |e><g|
template <typename Real = double>
ComplexMatrixT<Real> raising() {
  ComplexMatrixT<Real> m = ComplexMatrixT<Real>::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

/// sigma_- = |g><e|
template <typename Real = double>
ComplexMatrixT<Real> lowering() {
  ComplexMatrixT<Real> m = ComplexMatrixT<Real>::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

/// a0*I + ax*sigma_x + ay*sigma_y + az*sigma_z
template <typename Real = double>
ComplexMatrixT<Real> combine(Real a0, Real ax, Real ay, Real az) {
  using C = std::complex<Real>;
  ComplexMatrixT<Real> m(2, 2);
  m << C(a0 + az), C(ax, -ay), C(ax, ay), C(a0 - az);
  return m;
}

}  // namespace pauli

template <typename Real = double>
ComplexVectorT<Real> ket_excited() {
  ComplexVectorT<Real> v = ComplexVectorT<Real>::Zero(2);
  v(0) = 1;
  return v;
}

template <typename Real = double>
ComplexVectorT<Real> ket_ground() {
  ComplexVectorT<Real> v = ComplexVectorT<Real>::Zero(2);
  v(1) = 1;
  return v;
}

/// exp(A) for a square matrix.
///
/// Hermitian and anti-Hermitian inputs go through a self-adjoint
/// eigendecomposition (the result of an anti-Hermitian input is unitary to
/// rounding); anything else uses Eigen's scaling-and-squaring Pade routine.
template <typename Derived>
ComplexMatrixT<typename Derived::RealScalar> matrix_exponential(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  using Matrix = ComplexMatrixT<Real>;
  if (a.rows() != a.cols()) throw InvalidArgument("matrix_exponential: matrix is not square");
  if (!all_finite(a)) throw InvalidArgument("matrix_exponential: non-finite entries");
  const Eigen::Index n = a.rows();
  if (n == 0) return Matrix(0, 0);

  const Matrix m = a;
  const Real scale = Real(1) + m.cwiseAbs().maxCoeff();
  const Real eps = Real(64) * Eigen::NumTraits<Real>::epsilon() * scale;

  const Real anti_defect = (m + m.adjoint()).cwiseAbs().maxCoeff();
  if (anti_defect <= eps) {
    // A = -iK with K Hermitian.
    const std::complex<Real> i_unit(0, 1);
    const Matrix k = i_unit * m;
    if (n == 2) {
      // K = k0 I + kv.sigma, exp(-iK) = e^{-i k0}(cos|kv| I - i sin|kv| kv.sigma/|kv|).
      const Real k0 = (k(0, 0).real() + k(1, 1).real()) / 2;
      const Real kz = (k(0, 0).real() - k(1, 1).real()) / 2;
      const std::complex<Real> kxy = (k(1, 0) + std::conj(k(0, 1))) / Real(2);  // kx + i ky
      const Real norm = std::sqrt(kz * kz + std::norm(kxy));
      const Real c = std::cos(norm);
      const Real sinc = norm > Real(0) ? std::sin(norm) / norm : Real(1);
      Matrix out(2, 2);
      out(0, 0) = std::complex<Real>(c, -sinc * kz);
      out(1, 1) = std::complex<Real>(c, sinc * kz);
      out(0, 1) = -i_unit * sinc * std::conj(kxy);
      out(1, 0) = -i_unit * sinc * kxy;
      return std::polar(Real(1), -k0) * out;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es((k + k.adjoint()) / Real(2));
    const ComplexVectorT<Real> phases =
        es.eigenvalues().unaryExpr([](Real w) { return std::polar(Real(1), -w); });
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }
  if (hermitian_defect(m) <= eps) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / Real(2));
    const ComplexVectorT<Real> growth =
        es.eigenvalues().unaryExpr([](Real w) { return std::complex<Real>(std::exp(w)); });
    return es.eigenvectors() * growth.asDiagonal() * es.eigenvectors().adjoint();
  }
  return m.exp();
}

/// Eigenvalues of a Hermitian matrix in ascending order.
template <typename Derived>
RealVectorT<typename Derived::RealScalar> hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& a) {
  using Matrix = ComplexMatrixT<typename Derived::RealScalar>;
  const Matrix m = a;
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Largest |eigenvalue| of a Hermitian matrix.
template <typename Derived>
typename Derived::RealScalar spectral_norm_hermitian(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return hermitian_eigenvalues(a).cwiseAbs().maxCoeff();
}

}  // namespace qslkit
