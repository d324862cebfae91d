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

#include <gtest/gtest.h>

#include <random>

#include "oracles/reference.hpp"
#include "qslkit/density_matrix.hpp"
#include "qslkit/linalg.hpp"

namespace qslkit {
namespace {

TEST(Pauli, MatchSpelledOutMatrices) {
  EXPECT_TRUE(pauli::x().isApprox(oracle::sx()));
  EXPECT_TRUE(pauli::y().isApprox(oracle::sy()));
  EXPECT_TRUE(pauli::z().isApprox(oracle::sz()));
  EXPECT_TRUE(pauli::identity().isApprox(oracle::id2()));
}

TEST(Pauli, ExcitedIsPlusOneEigenstateOfZ) {
  EXPECT_TRUE((pauli::z() * ket_excited()).isApprox(ket_excited()));
  EXPECT_TRUE((pauli::z() * ket_ground()).isApprox(-ket_ground()));
}

TEST(Pauli, LadderOperators) {
  EXPECT_TRUE((pauli::lowering() * ket_excited()).isApprox(ket_ground()));
  EXPECT_TRUE((pauli::raising() * ket_ground()).isApprox(ket_excited()));
  EXPECT_NEAR((pauli::lowering() * ket_ground()).norm(), 0.0, 0.0);
  EXPECT_TRUE(pauli::raising().isApprox(pauli::lowering().adjoint()));
}

TEST(Pauli, CombineExpandsCoefficients) {
  const ComplexMatrix m = pauli::combine(0.3, -1.2, 0.7, 2.5);
  const oracle::Mat want = 0.3 * oracle::id2() - 1.2 * oracle::sx() + 0.7 * oracle::sy() + 2.5 * oracle::sz();
  EXPECT_LT((m - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Pauli, CommutationRelation) {
  const ComplexMatrix lhs = pauli::x() * pauli::y() - pauli::y() * pauli::x();
  EXPECT_TRUE(lhs.isApprox(Complex(0, 2) * pauli::z()));
}

TEST(MatrixExponential, QubitUnitaryMatchesTaylor) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const oracle::Mat h = oracle::random_hermitian(rng, 2);
    const ComplexMatrix a = Complex(0, -1) * h;
    EXPECT_LT((matrix_exponential(a) - oracle::expm_taylor(a)).cwiseAbs().maxCoeff(), 1e-13) << "sample " << k;
  }
}

TEST(MatrixExponential, LargerAntiHermitianMatchesTaylor) {
  std::mt19937_64 rng(12);
  for (int n : {3, 4, 6}) {
    const oracle::Mat h = oracle::random_hermitian(rng, n);
    const ComplexMatrix a = Complex(0, -0.7) * h;
    EXPECT_LT((matrix_exponential(a) - oracle::expm_taylor(a)).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n;
  }
}

TEST(MatrixExponential, HermitianAndGeneralMatchTaylor) {
  std::mt19937_64 rng(13);
  const oracle::Mat h = oracle::random_hermitian(rng, 3);
  EXPECT_LT((matrix_exponential(h) - oracle::expm_taylor(h)).cwiseAbs().maxCoeff(), 1e-11);

  ComplexMatrix g(2, 2);
  g << Complex(0.1, 0.2), Complex(-0.4, 0), Complex(0.3, -0.5), Complex(0.2, 0.1);
  EXPECT_LT((matrix_exponential(g) - oracle::expm_taylor(g)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(MatrixExponential, ZeroGivesIdentity) {
  EXPECT_TRUE(matrix_exponential(ComplexMatrix::Zero(2, 2)).isApprox(ComplexMatrix::Identity(2, 2)));
}

TEST(MatrixExponential, PauliRotationClosedForm) {
  // exp(-i a sigma_y) = cos(a) I - i sin(a) sigma_y
  const double a = 0.83;
  const ComplexMatrix u = matrix_exponential(ComplexMatrix(Complex(0, -a) * pauli::y()));
  const ComplexMatrix want = std::cos(a) * pauli::identity() - Complex(0, std::sin(a)) * pauli::y();
  EXPECT_LT((u - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MatrixExponential, RejectsBadInput) {
  EXPECT_THROW(matrix_exponential(ComplexMatrix::Zero(2, 3)), InvalidArgument);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = Complex(std::nan(""), 0);
  EXPECT_THROW(matrix_exponential(m), InvalidArgument);
}

TEST(Hermitian, DefectAndEigenvalues) {
  EXPECT_TRUE(is_hermitian(pauli::y()));
  EXPECT_FALSE(is_hermitian(pauli::raising()));
  const RealVector e = hermitian_eigenvalues(pauli::combine(0.0, 3.0, 0.0, 4.0));
  EXPECT_NEAR(e(0), -5, 1e-14);
  EXPECT_NEAR(e(1), 5, 1e-14);
  EXPECT_NEAR(spectral_norm_hermitian(pauli::combine(1.0, 0.0, 0.0, 2.0)), 3, 1e-14);
}

TEST(DensityMatrix, ValidatesInvariants) {
  EXPECT_NO_THROW(DensityMatrix::from_matrix(pauli::combine(0.5, 0.5, 0.0, 0.0)));
  EXPECT_THROW(DensityMatrix::from_matrix(pauli::combine(0.6, 0.0, 0.0, 0.0)), NotAState);  // trace 1.2
  EXPECT_THROW(DensityMatrix::from_matrix(pauli::combine(0.5, 0.6, 0.0, 0.0)), NotAState);  // eigenvalue -0.1
  EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix(pauli::raising())), NotAState);  // not Hermitian
  EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::Identity(2, 3)), NotAState);
}

TEST(DensityMatrix, PurityAndPureStates) {
  const DensityMatrix e = DensityMatrix::from_pure(ket_excited());
  EXPECT_NEAR(e.purity(), 1, 1e-15);
  EXPECT_NEAR(DensityMatrix::maximally_mixed(2).purity(), 0.5, 1e-15);
  EXPECT_NEAR(DensityMatrix::maximally_mixed(4).purity(), 0.25, 1e-15);
  ComplexVector unnormalised(2);
  unnormalised << 3, 4;
  EXPECT_NEAR(DensityMatrix::from_pure(unnormalised).matrix()(0, 0).real(), 9.0 / 25, 1e-15);
}

TEST(DensityMatrix, TraceDistance) {
  const DensityMatrix e = DensityMatrix::from_pure(ket_excited());
  const DensityMatrix g = DensityMatrix::from_pure(ket_ground());
  EXPECT_NEAR(trace_distance(e, g), 1, 1e-15);
  EXPECT_NEAR(trace_distance(e, DensityMatrix::maximally_mixed(2)), 0.5, 1e-15);
  EXPECT_NEAR(trace_distance(e, e), 0, 1e-15);
}

}  // namespace
}  // namespace qslkit
