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

#include <vector>

#include <Eigen/Dense>

namespace qslkit {

struct GaussLegendre {
  Eigen::VectorXd nodes;    ///< ascending, in (-1, 1)
  Eigen::VectorXd weights;  ///< sum to 2
};

/// Golub-Welsch: nodes and weights from the symmetric Jacobi matrix.
GaussLegendre gauss_legendre(int n);

/// Product rule on the unit sphere: Gauss-Legendre in cos(polar) times a
/// uniform azimuth grid. Weights integrate dOmega (they sum to 4 pi).
struct SphereRule {
  std::vector<Eigen::Vector3d> points;
  std::vector<double> weights;
};

SphereRule sphere_rule(int polar_order, int azimuth_order);

}  // namespace qslkit
