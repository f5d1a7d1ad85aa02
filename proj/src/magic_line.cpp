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

#include "paulipolar/magic_line.hpp"

#include <algorithm>
#include <stdexcept>

#include "paulipolar/contextuality.hpp"
#include "paulipolar/incidence.hpp"

namespace paulipolar {

MagicVeldkampLine magic_veldkamp_line(const PolarSpace& w52) {
  if (w52.n_qubits() != 3) {
    throw std::invalid_argument("the magic Veldkamp line lives in W(5,2)");
  }
  const uint32_t yyy = w52.point_from_str("YYY");
  MagicVeldkampLine line{perp_set(w52, yyy), quadric(w52, yyy), quadric(w52, 0), {}};
  PointSet core = line.perp.points & line.hyperbolic.points;
  line.core = core.values();
  return line;
}

bool core_is_doily(const PolarSpace& space, std::span<const uint32_t> pts) {
  if (pts.size() != 15) return false;
  PointLineGeometry g =
      space.induced_geometry(std::vector<uint32_t>(pts.begin(), pts.end()));
  if (g.lines.size() != 15) return false;
  return satisfies_gq_axioms(g, 2, 2) && !has_triangle(g);
}

const std::array<Duad, 15>& all_duads() {
  static const std::array<Duad, 15> duads = [] {
    std::array<Duad, 15> d{};
    int k = 0;
    for (uint8_t a = 1; a <= 6; ++a) {
      for (uint8_t b = a + 1; b <= 6; ++b) d[k++] = {a, b};
    }
    return d;
  }();
  return duads;
}

int duad_index(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > 6 || a == b) throw std::invalid_argument("bad duad");
  const auto& duads = all_duads();
  for (int i = 0; i < 15; ++i) {
    if (duads[i].a == a && duads[i].b == b) return i;
  }
  return -1;  // unreachable
}

const std::array<Matching, 15>& all_matchings() {
  static const std::array<Matching, 15> matchings = [] {
    std::array<Matching, 15> out{};
    const auto& duads = all_duads();
    int n = 0;
    for (uint8_t i = 0; i < 15; ++i) {
      for (uint8_t j = i + 1; j < 15; ++j) {
        if (!duads[i].disjoint(duads[j])) continue;
        for (uint8_t k = j + 1; k < 15; ++k) {
          if (!duads[k].disjoint(duads[i]) || !duads[k].disjoint(duads[j])) continue;
          int perm[6] = {duads[i].a, duads[i].b, duads[j].a,
                         duads[j].b, duads[k].a, duads[k].b};
          int inversions = 0;
          for (int x = 0; x < 6; ++x) {
            for (int y = x + 1; y < 6; ++y) inversions += perm[x] > perm[y] ? 1 : 0;
          }
          out[n++] = {{i, j, k}, (inversions % 2 == 0) ? +1 : -1};
        }
      }
    }
    if (n != 15) throw std::logic_error("matching table is broken");
    return out;
  }();
  return matchings;
}

namespace {

using Collinearity = std::array<std::array<bool, 15>, 15>;

Collinearity duad_collinearity() {
  Collinearity g{};
  const auto& duads = all_duads();
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) g[i][j] = (i != j) && duads[i].disjoint(duads[j]);
  }
  return g;
}

Collinearity core_collinearity(std::span<const uint32_t> core) {
  // In the induced doily two distinct points are collinear iff orthogonal;
  // the third point of their line (the sum) is automatically in the core.
  Collinearity g{};
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) {
      g[i][j] = (i != j) && packed_form(core[i], core[j]) == 0;
    }
  }
  return g;
}

// Backtracking isomorphism scan between the two collinearity graphs. Calls
// `emit` for each complete mapping; stops early once `emit` returns false.
template <typename Emit>
void scan_isomorphisms(const Collinearity& from, const Collinearity& to, Emit&& emit) {
  std::array<int, 15> mapping{};
  std::array<bool, 15> used{};
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == 15) return emit(mapping);
    for (int v = 0; v < 15; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int u = 0; u < k && ok; ++u) ok = (from[k][u] == to[v][mapping[u]]);
      if (!ok) continue;
      mapping[k] = v;
      used[v] = true;
      if (!self(self, k + 1)) return false;
      used[v] = false;
    }
    return true;
  };
  rec(rec, 0);
}

std::array<int, 15> solve_signs(std::span<const uint32_t> core,
                                const std::array<int, 15>& duad_to_core) {
  // Want s in {+-1}^15 with eps_L * prod_{p in L} s_p = kappa * sgn_L for
  // every matching L and a single kappa. Over F2 this is a linear system in
  // the sign exponents; try kappa = +1 first.
  const auto& matchings = all_matchings();
  std::array<int, 15> eps{};
  for (int m = 0; m < 15; ++m) {
    std::array<PauliOperator, 3> ops = {
        packed_to_operator(core[duad_to_core[matchings[m].duads[0]]], 3),
        packed_to_operator(core[duad_to_core[matchings[m].duads[1]]], 3),
        packed_to_operator(core[duad_to_core[matchings[m].duads[2]]], 3)};
    eps[m] = context_sign(std::span<const PauliOperator>(ops));
  }
  for (int kappa_bit = 0; kappa_bit < 2; ++kappa_bit) {
    std::array<uint32_t, 15> rows{};
    for (int m = 0; m < 15; ++m) {
      uint32_t row = 0;
      for (uint8_t d : all_matchings()[m].duads) row |= 1u << d;
      int rhs = (eps[m] != all_matchings()[m].sign) ? 1 : 0;
      rhs ^= kappa_bit;
      row |= static_cast<uint32_t>(rhs) << 15;
      rows[m] = row;
    }
    // Gaussian elimination over the 15 variables.
    int rank = 0;
    std::array<int, 15> pivot_of_col;
    pivot_of_col.fill(-1);
    for (int col = 0; col < 15; ++col) {
      int sel = -1;
      for (int r = rank; r < 15; ++r) {
        if ((rows[r] >> col) & 1) {
          sel = r;
          break;
        }
      }
      if (sel < 0) continue;
      std::swap(rows[rank], rows[sel]);
      for (int r = 0; r < 15; ++r) {
        if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
      }
      pivot_of_col[col] = rank;
      ++rank;
    }
    bool consistent = true;
    for (int r = rank; r < 15; ++r) consistent &= (rows[r] == 0);
    if (!consistent) continue;
    std::array<int, 15> sign;
    sign.fill(+1);
    for (int col = 0; col < 15; ++col) {
      if (pivot_of_col[col] >= 0 && ((rows[pivot_of_col[col]] >> 15) & 1)) {
        sign[col] = -1;
      }
    }
    return sign;
  }
  throw std::runtime_error("no sign assignment makes the labeling Pfaffian-compatible");
}

}  // namespace

DuadLabeling find_duad_labeling(const PolarSpace& space, std::span<const uint32_t> core) {
  if (!core_is_doily(space, core)) {
    throw std::invalid_argument("duad labeling needs a doily core");
  }
  Collinearity from = duad_collinearity();
  Collinearity to = core_collinearity(core);
  std::array<int, 15> found{};
  bool have = false;
  scan_isomorphisms(from, to, [&](const std::array<int, 15>& mapping) {
    found = mapping;
    have = true;
    return false;  // first match is the canonical one
  });
  if (!have) {
    throw std::logic_error("no duad labeling exists; the core is not a doily");
  }
  DuadLabeling labeling{};
  for (int d = 0; d < 15; ++d) labeling.operator_for_duad[d] = core[found[d]];
  labeling.sign = solve_signs(core, found);
  return labeling;
}

uint64_t count_duad_labelings(const PolarSpace& space, std::span<const uint32_t> core) {
  if (!core_is_doily(space, core)) {
    throw std::invalid_argument("duad labeling needs a doily core");
  }
  uint64_t count = 0;
  scan_isomorphisms(duad_collinearity(), core_collinearity(core),
                    [&](const std::array<int, 15>&) {
                      ++count;
                      return true;
                    });
  return count;
}

WeightDiagram weight_orbit(const PolarSpace& space, std::span<const uint32_t> roots,
                           uint32_t highest, std::span<const uint32_t> core) {
  if (std::find(core.begin(), core.end(), highest) == core.end()) {
    throw std::invalid_argument("highest weight operator must lie in the core");
  }
  WeightDiagram diagram;
  diagram.highest = highest;
  if (roots.empty()) {
    diagram.node_for_duad.fill(0);
    diagram.node_for_duad[duad_index(1, 2)] = highest;
    return diagram;
  }
  if (roots.size() != 5) {
    throw std::invalid_argument("the weight orbit takes five roots (or none)");
  }
  for (uint32_t r : roots) {
    if (r == 0 || r >= space.vector_count() || packed_q0(r) != 1) {
      throw std::invalid_argument("roots must be skew-symmetric operators");
    }
  }
  const auto& duads = all_duads();
  std::array<uint32_t, 15> node{};
  std::array<bool, 15> assigned{};
  node[duad_index(1, 2)] = highest;
  assigned[duad_index(1, 2)] = true;
  std::vector<int> stack = {duad_index(1, 2)};
  while (!stack.empty()) {
    const int di = stack.back();
    stack.pop_back();
    const Duad d = duads[di];
    for (int k = 1; k <= 5; ++k) {
      const bool has_k = (d.a == k || d.b == k);
      const bool has_k1 = (d.a == k + 1 || d.b == k + 1);
      if (!has_k || has_k1) continue;
      const int other = (d.a == k) ? d.b : d.a;
      const int dj = duad_index(k + 1, other);
      const uint32_t v = node[di] ^ roots[k - 1];
      if (v == 0 || std::find(core.begin(), core.end(), v) == core.end()) {
        throw std::invalid_argument("weight orbit left the core set");
      }
      if (assigned[dj]) {
        if (node[dj] != v) {
          throw std::invalid_argument("weight orbit is inconsistent across paths");
        }
      } else {
        node[dj] = v;
        assigned[dj] = true;
        stack.push_back(dj);
      }
      diagram.edges.push_back({static_cast<uint8_t>(di), static_cast<uint8_t>(dj),
                               static_cast<uint8_t>(k)});
    }
  }
  for (bool a : assigned) {
    if (!a) throw std::invalid_argument("weight orbit did not reach all 15 weights");
  }
  std::array<uint32_t, 15> sorted = node;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("weight orbit nodes are not distinct");
  }
  std::sort(diagram.edges.begin(), diagram.edges.end(),
            [](const WeightDiagram::Edge& a, const WeightDiagram::Edge& b) {
              return std::tie(a.from_duad, a.root) < std::tie(b.from_duad, b.root);
            });
  diagram.node_for_duad = node;
  return diagram;
}

namespace {

template <typename OnQuintuple>
void scan_root_quintuples(const PolarSpace& space, std::span<const uint32_t> core,
                          uint32_t highest, OnQuintuple&& on_quintuple) {
  std::vector<uint32_t> skew;
  for (uint32_t v : space.points()) {
    if (packed_q0(v) == 1) skew.push_back(v);
  }
  std::array<uint32_t, 5> roots{};
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == 5) {
      try {
        weight_orbit(space, roots, highest, core);
      } catch (const std::invalid_argument&) {
        return true;
      }
      return on_quintuple(roots);
    }
    for (uint32_t candidate : skew) {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int want = (j == k - 1) ? 1 : 0;  // A5 chain pattern
        ok = (packed_form(roots[j], candidate) == want);
      }
      if (!ok) continue;
      roots[k] = candidate;
      if (!self(self, k + 1)) return false;
    }
    return true;
  };
  rec(rec, 0);
}

}  // namespace

std::array<uint32_t, 5> find_root_quintuple(const PolarSpace& space,
                                            std::span<const uint32_t> core,
                                            uint32_t highest) {
  std::array<uint32_t, 5> result{};
  bool found = false;
  scan_root_quintuples(space, core, highest, [&](const std::array<uint32_t, 5>& roots) {
    result = roots;
    found = true;
    return false;
  });
  if (!found) {
    throw std::runtime_error("no valid root quintuple found for this highest weight");
  }
  return result;
}

uint64_t count_root_quintuples(const PolarSpace& space, std::span<const uint32_t> core,
                               uint32_t highest) {
  uint64_t count = 0;
  scan_root_quintuples(space, core, highest, [&](const std::array<uint32_t, 5>&) {
    ++count;
    return true;
  });
  return count;
}

std::pair<PointSet, PointSet> partition_35(const PolarSpace& w52) {
  if (w52.n_qubits() != 3) {
    throw std::invalid_argument("the 35 = 15 + 20 split lives in W(5,2)");
  }
  const uint32_t yyy = w52.point_from_str("YYY");
  PointSet doily = w52.empty_set(), rest = w52.empty_set();
  for (uint32_t v : w52.points()) {
    if (packed_q0(v) != 0) continue;
    (packed_form(v, yyy) == 0 ? doily : rest).set(v);
  }
  return {doily, rest};
}

}  // namespace paulipolar
