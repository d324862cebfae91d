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

// SU(N) generators, structure constants and the Bloch-coefficient maps
//   b_mu = 2 tr(rho T_mu),   rho = I/N + b_mu T_mu.

#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "qslkit/density_matrix.hpp"
#include "qslkit/linalg.hpp"

namespace qslkit {

inline constexpr int kMaxGeneratorDim = 8;

/// Traceless Hermitian basis T_mu with tr(T_mu T_nu) = delta_mu_nu / 2.
template <typename Real>
struct GeneratorSetT {
  int dim = 0;
  std::vector<ComplexMatrixT<Real>> generators;

  std::size_t size() const { return generators.size(); }
  const ComplexMatrixT<Real>& operator[](std::size_t mu) const { return generators[mu]; }
};

using GeneratorSet = GeneratorSetT<double>;

/// Totally antisymmetric f with [T_a, T_b] = i f_abc T_c; indices are zero-based.
template <typename Real>
class StructureConstantsT {
 public:
  StructureConstantsT(int dim, int count) : dim_(dim), n_(count), f_(std::size_t(count) * count * count, Real(0)) {}

  int dim() const { return dim_; }
  int count() const { return n_; }
  Real operator()(int a, int b, int c) const { return f_[index(a, b, c)]; }
  Real& operator()(int a, int b, int c) { return f_[index(a, b, c)]; }

 private:
  std::size_t index(int a, int b, int c) const {
    return (std::size_t(a) * n_ + std::size_t(b)) * n_ + std::size_t(c);
  }
  int dim_;
  int n_;
  std::vector<Real> f_;
};

using StructureConstants = StructureConstantsT<double>;

/// Generalised Gell-Mann matrices, halved.
///
/// Ordering: for each level k = 1..N-1, the symmetric and antisymmetric pairs
/// (j, k) for j < k, then the k-th diagonal generator. N = 2 gives
/// (sigma_x, sigma_y, sigma_z)/2 and N = 3 gives lambda_1..lambda_8 / 2 in
/// the usual numbering.
template <typename Real = double>
GeneratorSetT<Real> su_generators(int n) {
  if (n < 2 || n > kMaxGeneratorDim) {
    std::ostringstream os;
    os << "su_generators: N=" << n << " outside [2, " << kMaxGeneratorDim << "]";
    throw InvalidArgument(os.str());
  }
  using Matrix = ComplexMatrixT<Real>;
  using C = std::complex<Real>;
  GeneratorSetT<Real> out;
  out.dim = n;
  out.generators.reserve(std::size_t(n) * n - 1);
  const Real half = Real(1) / Real(2);
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      Matrix sym = Matrix::Zero(n, n);
      sym(j, k) = half;
      sym(k, j) = half;
      out.generators.push_back(sym);
      Matrix anti = Matrix::Zero(n, n);
      anti(j, k) = C(0, -half);
      anti(k, j) = C(0, half);
      out.generators.push_back(anti);
    }
    Matrix diag = Matrix::Zero(n, n);
    const Real norm = std::sqrt(Real(2) / (Real(k) * Real(k + 1))) * half;
    for (int j = 0; j < k; ++j) diag(j, j) = norm;
    diag(k, k) = -Real(k) * norm;
    out.generators.push_back(diag);
  }
  return out;
}

/// Throws InvalidArgument unless the set is traceless and orthonormal.
template <typename Real>
void validate_generators(const GeneratorSetT<Real>& gens, Real tol = Real(1e-12)) {
  const int n = gens.dim;
  if (n < 2 || gens.size() != std::size_t(n) * n - 1)
    throw InvalidArgument("generator set has wrong size for its dimension");
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (gens[a].rows() != n || gens[a].cols() != n)
      throw InvalidArgument("generator has wrong shape");
    if (!is_hermitian(gens[a], tol)) throw InvalidArgument("generator is not Hermitian");
    if (std::abs(gens[a].trace()) > tol) throw InvalidArgument("generator is not traceless");
    for (std::size_t b = a; b < gens.size(); ++b) {
      const std::complex<Real> g = (gens[a] * gens[b]).trace();
      const Real expect = a == b ? Real(0.5) : Real(0);
      if (std::abs(g - expect) > tol)
        throw InvalidArgument("generator set is not orthonormal under tr(T_a T_b) = delta/2");
    }
  }
}

/// f_abc = -2i tr([T_a, T_b] T_c).
template <typename Real>
StructureConstantsT<Real> structure_constants(const GeneratorSetT<Real>& gens) {
  validate_generators(gens);
  const int count = int(gens.size());
  StructureConstantsT<Real> f(gens.dim, count);
  const std::complex<Real> minus_2i(0, -2);
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const ComplexMatrixT<Real> comm = gens[a] * gens[b] - gens[b] * gens[a];
      for (int c = 0; c < count; ++c) {
        const std::complex<Real> v = minus_2i * (comm * gens[c]).trace();
        if (std::abs(v.imag()) > Real(1e-12))
          throw NumericalFailure("structure_constants: imaginary residue above 1e-12");
        const Real re = std::abs(v.real()) < Real(1e-15) ? Real(0) : v.real();
        f(a, b, c) = re;
        f(b, a, c) = -re;
      }
    }
  }
  return f;
}

/// values_mu = 2 tr(A T_mu). For a state this is the Bloch vector; for a
/// Hamiltonian it gives h_mu.
template <typename Real, typename Derived>
RealVectorT<Real> bloch_coeffs(const Eigen::MatrixBase<Derived>& a, const GeneratorSetT<Real>& gens) {
  if (a.rows() != gens.dim || a.cols() != gens.dim)
    throw InvalidArgument("bloch_coeffs: dimension mismatch");
  RealVectorT<Real> out(Eigen::Index(gens.size()));
  for (std::size_t mu = 0; mu < gens.size(); ++mu)
    out(Eigen::Index(mu)) = Real(2) * std::real((a * gens[mu]).trace());
  return out;
}

template <typename Real>
RealVectorT<Real> bloch_coeffs(const DensityMatrixT<Real>& rho, const GeneratorSetT<Real>& gens) {
  return bloch_coeffs(rho.matrix(), gens);
}

/// rho = I/N + b_mu T_mu; throws NotAState if the result is not a state.
template <typename Real>
DensityMatrixT<Real> density_from_bloch(const RealVectorT<Real>& b, const GeneratorSetT<Real>& gens) {
  if (b.size() != Eigen::Index(gens.size()))
    throw InvalidArgument("density_from_bloch: coefficient count does not match generator set");
  const int n = gens.dim;
  ComplexMatrixT<Real> m = ComplexMatrixT<Real>::Identity(n, n) / Real(n);
  for (std::size_t mu = 0; mu < gens.size(); ++mu) m += b(Eigen::Index(mu)) * gens[mu];
  return DensityMatrixT<Real>::from_matrix(std::move(m));
}

/// Qubit shortcuts: tr(A sigma) with the fixed (x, y, z) Pauli ordering.
inline Eigen::Vector3d bloch_vector(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw InvalidArgument("bloch_vector: expected a 2x2 matrix");
  const Complex i_unit(0, 1);
  return {(a(0, 1) + a(1, 0)).real(), (i_unit * (a(0, 1) - a(1, 0))).real(), (a(0, 0) - a(1, 1)).real()};
}

inline Eigen::Vector3d bloch_vector(const DensityMatrix& rho) { return bloch_vector(rho.matrix()); }

inline DensityMatrix qubit_state(const Eigen::Vector3d& b) {
  return DensityMatrix::from_matrix(pauli::combine(0.5, 0.5 * b.x(), 0.5 * b.y(), 0.5 * b.z()));
}

}  // namespace qslkit
