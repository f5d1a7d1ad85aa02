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

#include "paulipolar/incidence.hpp"

#include <stdexcept>

namespace paulipolar {

std::vector<std::vector<bool>> PointLineGeometry::collinearity() const {
  std::vector<std::vector<bool>> g(n_points, std::vector<bool>(n_points, false));
  for (const auto& line : lines) {
    for (size_t i = 0; i < line.size(); ++i) {
      for (size_t j = i + 1; j < line.size(); ++j) {
        g[line[i]][line[j]] = g[line[j]][line[i]] = true;
      }
    }
  }
  return g;
}

std::vector<uint32_t> PointLineGeometry::lines_per_point() const {
  std::vector<uint32_t> deg(n_points, 0);
  for (const auto& line : lines) {
    for (uint32_t p : line) ++deg[p];
  }
  return deg;
}

PointLineGeometry grid_gq21() {
  PointLineGeometry g;
  g.n_points = 9;
  for (uint32_t r = 0; r < 3; ++r) {
    g.lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  }
  for (uint32_t c = 0; c < 3; ++c) {
    g.lines.push_back({c, c + 3, c + 6});
  }
  return g;
}

bool satisfies_gq_axioms(const PointLineGeometry& g, uint32_t s, uint32_t t) {
  for (const auto& line : g.lines) {
    if (line.size() != s + 1) return false;
  }
  for (uint32_t deg : g.lines_per_point()) {
    if (deg != t + 1) return false;
  }
  auto coll = g.collinearity();
  for (uint32_t p = 0; p < g.n_points; ++p) {
    for (const auto& line : g.lines) {
      bool on_line = false;
      for (uint32_t q : line) on_line |= (q == p);
      if (on_line) continue;
      uint32_t hits = 0;
      for (uint32_t q : line) hits += coll[p][q] ? 1 : 0;
      if (hits != 1) return false;
    }
  }
  return true;
}

bool has_triangle(const PointLineGeometry& g) {
  auto coll = g.collinearity();
  // Record which pairs share a line, then look for a collinear triple whose
  // three points are not all on one line.
  for (uint32_t a = 0; a < g.n_points; ++a) {
    for (uint32_t b = a + 1; b < g.n_points; ++b) {
      if (!coll[a][b]) continue;
      for (uint32_t c = b + 1; c < g.n_points; ++c) {
        if (!coll[a][c] || !coll[b][c]) continue;
        bool one_line = false;
        for (const auto& line : g.lines) {
          int found = 0;
          for (uint32_t q : line) found += (q == a || q == b || q == c) ? 1 : 0;
          if (found == 3) {
            one_line = true;
            break;
          }
        }
        if (!one_line) return true;
      }
    }
  }
  return false;
}

bool subset_contains_line(const PointLineGeometry& g, const std::vector<bool>& subset) {
  for (const auto& line : g.lines) {
    bool all = true;
    for (uint32_t p : line) all &= subset[p];
    if (all) return true;
  }
  return false;
}

bool is_geometric_hyperplane(const PointLineGeometry& g, const std::vector<bool>& subset) {
  if (subset.size() != g.n_points) {
    throw std::invalid_argument("subset size does not match the geometry");
  }
  size_t count = 0;
  for (bool b : subset) count += b ? 1 : 0;
  if (count == 0 || count == g.n_points) return false;
  for (const auto& line : g.lines) {
    size_t hits = 0;
    for (uint32_t p : line) hits += subset[p] ? 1 : 0;
    if (hits != 1 && hits != line.size()) return false;
  }
  return true;
}

std::vector<std::vector<bool>> enumerate_hyperplanes_subsets(const PointLineGeometry& g) {
  if (g.n_points > 20) {
    throw std::invalid_argument("subset scan limited to 20 points");
  }
  std::vector<std::vector<bool>> out;
  const uint32_t limit = 1u << g.n_points;
  std::vector<bool> subset(g.n_points);
  for (uint32_t mask = 1; mask + 1 < limit; ++mask) {
    for (uint32_t p = 0; p < g.n_points; ++p) subset[p] = (mask >> p) & 1;
    if (is_geometric_hyperplane(g, subset)) out.push_back(subset);
  }
  return out;
}

}  // namespace paulipolar
