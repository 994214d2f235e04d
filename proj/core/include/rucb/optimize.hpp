// Copyright 2026 The rucbound developers
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

#include <array>
#include <functional>

#include "rucb/linalg.hpp"

namespace rucb {

/// Knobs for the grid + simplex search over the unitary group.
struct OptimizerOptions {
  int grid_points = 24;      // per angle
  int refine_starts = 5;     // simplex restarts from the best grid cells
  int max_iterations = 200;  // per simplex run
  double simplex_tol = 1e-10;
};

/// U(alpha, beta, gamma): a 2x2 unitary up to (irrelevant) global phase,
///
///   [  e^{i a} cos b   e^{i g} sin b ]
///   [ -e^{-i g} sin b  e^{-i a} cos b ]
///
/// with a, g in [0, 2pi) and b in [0, pi/2]. The reduced beta range loses
/// nothing: sign redundancy is absorbed by the alpha and gamma phases.
ComplexMatrix unitary_from_angles(double alpha, double beta, double gamma);

/// Result of a search over the unitary group.
struct UnitarySearchResult {
  double value = 0.0;
  std::array<double, 3> angles{};
  ComplexMatrix unitary{2};
};

/// Maximize a smooth objective over the three-angle unitary
/// parametrization: coarse grid over all angle triples, then
/// derivative-free simplex refinement from the best grid cells.
/// Deterministic: starts are enumerated in grid order, never raced.
UnitarySearchResult maximize_over_unitaries(
    const std::function<double(const std::array<double, 3>&)>& objective,
    const OptimizerOptions& opts = {});

/// Nelder-Mead simplex maximization (used for the refinement stage;
/// exposed for tests). Returns the best point found.
std::pair<std::array<double, 3>, double> nelder_mead_maximize(
    const std::function<double(const std::array<double, 3>&)>& objective,
    const std::array<double, 3>& start, double step, int max_iterations, double tol);

}  // namespace rucb
