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

#include "rucb/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace rucb {

ComplexMatrix unitary_from_angles(double alpha, double beta, double gamma) {
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  const cplx ea = std::polar(1.0, alpha);
  const cplx eg = std::polar(1.0, gamma);
  return ComplexMatrix(2, {ea * cb, eg * sb, -std::conj(eg) * sb, std::conj(ea) * cb});
}

std::pair<std::array<double, 3>, double> nelder_mead_maximize(
    const std::function<double(const std::array<double, 3>&)>& objective,
    const std::array<double, 3>& start, double step, int max_iterations, double tol) {
  using Point = std::array<double, 3>;
  struct Vertex {
    Point x;
    double f;
  };

  auto eval = [&](const Point& p) { return objective(p); };

  std::array<Vertex, 4> simplex;
  simplex[0] = {start, eval(start)};
  for (int i = 0; i < 3; ++i) {
    Point p = start;
    p[static_cast<size_t>(i)] += step;
    simplex[static_cast<size_t>(i) + 1] = {p, eval(p)};
  }

  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  for (int it = 0; it < max_iterations; ++it) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
    if (simplex.front().f - simplex.back().f <= tol) break;

    Point centroid{};
    for (int v = 0; v < 3; ++v) {
      for (size_t d = 0; d < 3; ++d) centroid[d] += simplex[static_cast<size_t>(v)].x[d] / 3.0;
    }
    const Vertex& worst = simplex.back();

    auto along = [&](double coeff) {
      Point p;
      for (size_t d = 0; d < 3; ++d) p[d] = centroid[d] + coeff * (centroid[d] - worst.x[d]);
      return p;
    };

    const Point xr = along(kReflect);
    const double fr = eval(xr);
    if (fr > simplex[0].f) {
      const Point xe = along(kExpand);
      const double fe = eval(xe);
      simplex.back() = fe > fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr > simplex[2].f) {
      simplex.back() = {xr, fr};
      continue;
    }
    const Point xc = along(-kContract);
    const double fc = eval(xc);
    if (fc > worst.f) {
      simplex.back() = {xc, fc};
      continue;
    }
    for (size_t v = 1; v < 4; ++v) {
      for (size_t d = 0; d < 3; ++d) {
        simplex[v].x[d] = simplex[0].x[d] + kShrink * (simplex[v].x[d] - simplex[0].x[d]);
      }
      simplex[v].f = eval(simplex[v].x);
    }
  }

  std::sort(simplex.begin(), simplex.end(),
            [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
  return {simplex.front().x, simplex.front().f};
}

UnitarySearchResult maximize_over_unitaries(
    const std::function<double(const std::array<double, 3>&)>& objective,
    const OptimizerOptions& opts) {
  const int n = std::max(2, opts.grid_points);
  const double step_a = 2.0 * std::numbers::pi / n;
  const double step_b = 0.5 * std::numbers::pi / (n - 1);

  struct Cell {
    double f;
    std::array<double, 3> x;
  };
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n));

  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      for (int ig = 0; ig < n; ++ig) {
        const std::array<double, 3> x{ia * step_a, ib * step_b, ig * step_a};
        cells.push_back({objective(x), x});
      }
    }
  }
  const int starts = std::clamp<int>(opts.refine_starts, 1, static_cast<int>(cells.size()));
  std::partial_sort(cells.begin(), cells.begin() + starts, cells.end(),
                    [](const Cell& a, const Cell& b) { return a.f > b.f; });

  UnitarySearchResult best;
  best.value = cells.front().f;
  best.angles = cells.front().x;
  for (int s = 0; s < starts; ++s) {
    const auto [x, f] = nelder_mead_maximize(objective, cells[static_cast<size_t>(s)].x,
                                             0.5 * step_a, opts.max_iterations, opts.simplex_tol);
    if (f > best.value) {
      best.value = f;
      best.angles = x;
    }
  }
  best.unitary = unitary_from_angles(best.angles[0], best.angles[1], best.angles[2]);
  return best;
}

}  // namespace rucb
