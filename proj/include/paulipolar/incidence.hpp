// Copyright 2026 The PauliPolar Authors
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

#ifndef PAULIPOLAR_INCIDENCE_HPP
#define PAULIPOLAR_INCIDENCE_HPP

#include <cstdint>
#include <vector>

namespace paulipolar {

// Abstract point-line geometry on points 0..n_points-1. Only used for small
// structures (the 3x3 grid, the doily and doily-sized subgeometries), so the
// dumb representations are fine.
struct PointLineGeometry {
  uint32_t n_points = 0;
  std::vector<std::vector<uint32_t>> lines;

  std::vector<std::vector<bool>> collinearity() const;
  std::vector<uint32_t> lines_per_point() const;
};

// The 3x3 grid GQ(2,1): 9 points, 3 rows and 3 columns.
PointLineGeometry grid_gq21();

// Generalized-quadrangle axioms for GQ(s,t): s+1 points per line, t+1 lines
// per point, and for p not on L exactly one point of L collinear with p
// (which forces triangle-freeness).
bool satisfies_gq_axioms(const PointLineGeometry& g, uint32_t s, uint32_t t);

// Three pairwise-collinear points not all on one line.
bool has_triangle(const PointLineGeometry& g);

// Every line meets the subset in exactly 1 point or lies inside it; proper
// nonempty subsets only. `subset` is a point mask of size n_points.
bool is_geometric_hyperplane(const PointLineGeometry& g, const std::vector<bool>& subset);

// All geometric hyperplanes by subset scan; n_points <= 20.
std::vector<std::vector<bool>> enumerate_hyperplanes_subsets(const PointLineGeometry& g);

// True when the subset contains a full line of g.
bool subset_contains_line(const PointLineGeometry& g, const std::vector<bool>& subset);

}  // namespace paulipolar

#endif
