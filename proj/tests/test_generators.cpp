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
#include "qslkit/generators.hpp"
#include "qslkit/thermal.hpp"

namespace qslkit {
namespace {

class SuGenerators : public ::testing::TestWithParam<int> {};

TEST_P(SuGenerators, OrthonormalHermitianTraceless) {
  const int n = GetParam();
  const GeneratorSet gens = su_generators(n);
  ASSERT_EQ(int(gens.size()), n * n - 1);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    EXPECT_TRUE(is_hermitian(gens[a]));
    EXPECT_NEAR(std::abs(gens[a].trace()), 0, 1e-15);
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const double want = a == b ? 0.5 : 0.0;
      EXPECT_NEAR(std::abs((gens[a] * gens[b]).trace() - Complex(want)), 0, 1e-14) << a << "," << b;
    }
  }
}

TEST_P(SuGenerators, StructureConstantsReproduceCommutators) {
  const int n = GetParam();
  const GeneratorSet gens = su_generators(n);
  const StructureConstants f = structure_constants(gens);
  const int m = int(gens.size());
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      ComplexMatrix rhs = ComplexMatrix::Zero(n, n);
      for (int c = 0; c < m; ++c) rhs += Complex(0, f(a, b, c)) * gens[std::size_t(c)];
      const ComplexMatrix lhs = gens[std::size_t(a)] * gens[std::size_t(b)] - gens[std::size_t(b)] * gens[std::size_t(a)];
      EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14);
      for (int c = 0; c < m; ++c) {
        EXPECT_NEAR(f(a, b, c), -f(b, a, c), 1e-15);
        EXPECT_NEAR(f(a, b, c), f(b, c, a), 1e-15);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, SuGenerators, ::testing::Values(2, 3, 4, 5));

TEST(Generators, Su2IsHalfPauliWithLeviCivita) {
  const GeneratorSet gens = su_generators(2);
  EXPECT_TRUE(gens[0].isApprox(pauli::x() / 2.0));
  EXPECT_TRUE(gens[1].isApprox(pauli::y() / 2.0));
  EXPECT_TRUE(gens[2].isApprox(pauli::z() / 2.0));
  const StructureConstants f = structure_constants(gens);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) EXPECT_NEAR(f(a, b, c), oracle::levi_civita(a, b, c), 1e-15);
}

TEST(Generators, Su3KnownConstants) {
  const StructureConstants f = structure_constants(su_generators(3));
  // Gell-Mann numbering lambda_1..lambda_8 maps to indices 0..7.
  EXPECT_NEAR(f(0, 1, 2), 1.0, 1e-14);
  EXPECT_NEAR(f(0, 3, 6), 0.5, 1e-14);
  EXPECT_NEAR(f(3, 4, 7), std::sqrt(3.0) / 2, 1e-14);
  EXPECT_NEAR(f(5, 6, 7), std::sqrt(3.0) / 2, 1e-14);
}

TEST(Generators, RejectsUnsupportedDimensions) {
  EXPECT_THROW(su_generators(1), InvalidArgument);
  EXPECT_THROW(su_generators(kMaxGeneratorDim + 1), InvalidArgument);
}

TEST(Generators, BlochRoundTripRandomStates) {
  std::mt19937_64 rng(21);
  const GeneratorSet gens = su_generators(2);
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector3d b = oracle::random_bloch(rng);
    const DensityMatrix rho = qubit_state(b);
    EXPECT_LT((bloch_vector(rho) - b).norm(), 1e-14);
    const RealVector coeffs = bloch_coeffs(rho, gens);
    EXPECT_LT((coeffs - RealVector(b)).norm(), 1e-14);
    EXPECT_LT((density_from_bloch(coeffs, gens).matrix() - rho.matrix()).norm(), 1e-14);
  }
}

TEST(Generators, QubitBlochNormBoundedAndPurity) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Vector3d b = oracle::random_bloch(rng);
    const DensityMatrix rho = qubit_state(b);
    EXPECT_LE(bloch_vector(rho).norm(), 1 + 1e-9);
    EXPECT_NEAR(rho.purity(), (1 + b.squaredNorm()) / 2, 1e-14);
  }
  EXPECT_NEAR(bloch_vector(DensityMatrix::from_pure(ket_excited())).norm(), 1, 1e-15);
  EXPECT_THROW(qubit_state(Eigen::Vector3d(0, 0, 1.1)), NotAState);
}

TEST(Generators, HamiltonianCoefficients) {
  // h = tr(H sigma) for H = a sigma_x + b sigma_y + c sigma_z is 2 (a, b, c).
  const Eigen::Vector3d h = bloch_vector(pauli::combine(0.4, 1.0, -2.0, 0.5));
  EXPECT_LT((h - Eigen::Vector3d(2, -4, 1)).norm(), 1e-15);
}

TEST(Thermal, InfiniteTemperatureIsMaximallyMixed) {
  const DensityMatrix rho = thermal_state(pauli::combine(0.0, 0.3, 0.1, -0.8), InverseTemperature::finite(0));
  EXPECT_LT((rho.matrix() - ComplexMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Thermal, ZeroTemperatureIsGroundProjector) {
  const ComplexMatrix h = pauli::combine(0.0, 0.0, 0.0, 1.0);  // ground state |g>
  const DensityMatrix rho = thermal_state(h, InverseTemperature::infinite());
  EXPECT_LT((rho.matrix() - DensityMatrix::from_pure(ket_ground()).matrix()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(thermal_state(ComplexMatrix(pauli::identity()), InverseTemperature::infinite()), InvalidArgument);
}

TEST(Thermal, QubitClosedForm) {
  const double delta = 0.3, g0 = -0.5;
  const double e0 = std::hypot(delta, g0);
  for (double beta : {0.1, 1.0, 7.0}) {
    const DensityMatrix rho = thermal_state(pauli::combine(0.0, delta, 0.0, g0), InverseTemperature::finite(beta));
    const Eigen::Vector3d want = -std::tanh(beta * e0) * Eigen::Vector3d(delta, 0, g0) / e0;
    EXPECT_LT((bloch_vector(rho) - want).norm(), 1e-14) << "beta=" << beta;
  }
}

TEST(Thermal, HugeBetaDoesNotOverflow) {
  const ComplexMatrix h = pauli::combine(0.0, 0.1, 0.0, 0.2);
  const DensityMatrix hot = thermal_state(h, InverseTemperature::finite(5e28));
  const DensityMatrix cold = thermal_state(h, InverseTemperature::infinite());
  EXPECT_LT((hot.matrix() - cold.matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Thermal, RejectsBadInput) {
  EXPECT_THROW(InverseTemperature::finite(-1), InvalidArgument);
  EXPECT_THROW(thermal_state(ComplexMatrix(pauli::raising()), InverseTemperature::finite(1)), InvalidArgument);
}

}  // namespace
}  // namespace qslkit
