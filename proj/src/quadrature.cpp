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

#include "qslkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qslkit/errors.hpp"

namespace qslkit {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: order must be positive");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussLegendre rule;
  rule.nodes = es.eigenvalues();
  rule.weights = 2.0 * es.eigenvectors().row(0).transpose().array().square();
  return rule;
}

SphereRule sphere_rule(int polar_order, int azimuth_order) {
  if (polar_order < 1 || azimuth_order < 1) throw InvalidArgument("sphere_rule: orders must be positive");
  const GaussLegendre gl = gauss_legendre(polar_order);
  SphereRule rule;
  rule.points.reserve(std::size_t(polar_order) * azimuth_order);
  rule.weights.reserve(std::size_t(polar_order) * azimuth_order);
  const double dphi = 2 * std::numbers::pi / azimuth_order;
  for (int i = 0; i < polar_order; ++i) {
    const double c = gl.nodes(i);
    const double s = std::sqrt(std::max(0.0, 1 - c * c));
    for (int j = 0; j < azimuth_order; ++j) {
      const double phi = (j + 0.5) * dphi;
      rule.points.emplace_back(s * std::cos(phi), s * std::sin(phi), c);
      rule.weights.push_back(gl.weights(i) * dphi);
    }
  }
  return rule;
}

}  // namespace qslkit
