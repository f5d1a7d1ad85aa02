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

#ifndef PAULIPOLAR_MAGIC_LINE_HPP
#define PAULIPOLAR_MAGIC_LINE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "paulipolar/polar_space.hpp"

namespace paulipolar {

// The Veldkamp line (H_III, H_YYY, C_YYY) of W(5,2): the perp set of YYY,
// the elliptic quadric of YYY and the hyperbolic quadric of the symmetric
// operators, with their common 15-point core.
struct MagicVeldkampLine {
  Hyperplane perp;        // C_YYY, 31 points
  Hyperplane elliptic;    // H_YYY, 27 points
  Hyperplane hyperbolic;  // H_III, 35 points
  std::vector<uint32_t> core;
};

MagicVeldkampLine magic_veldkamp_line(const PolarSpace& w52);

// GQ(2,2) test on the geometry induced on pts: 15 points, 15 internal lines,
// 3 lines through each point, triangle free.
bool core_is_doily(const PolarSpace& space, std::span<const uint32_t> pts);

// 2-subsets of {1..6} in lexicographic order; index 0 is {1,2}.
struct Duad {
  uint8_t a, b;  // 1-based, a < b
  bool disjoint(const Duad& other) const {
    return a != other.a && a != other.b && b != other.a && b != other.b;
  }
};
const std::array<Duad, 15>& all_duads();
int duad_index(int a, int b);

// Bijection duads <-> core operators with disjointness as collinearity,
// plus a +-1 phase per operator chosen so that Tr(Omega^3) lands on a fixed
// multiple of the Pfaffian (see trace_cube_pfaffian_check).
struct DuadLabeling {
  std::array<uint32_t, 15> operator_for_duad;
  std::array<int, 15> sign;
};

DuadLabeling find_duad_labeling(const PolarSpace& space, std::span<const uint32_t> core);
uint64_t count_duad_labelings(const PolarSpace& space, std::span<const uint32_t> core);

// Perfect matchings of {1..6} as duad-index triples, with the sign of the
// permutation (i1 j1 i2 j2 i3 j3). These are the 15 monomials of the 6x6
// Pfaffian.
struct Matching {
  std::array<uint8_t, 3> duads;
  int sign;
};
const std::array<Matching, 15>& all_matchings();

// Weight diagram of the 15-dimensional module generated from `highest` by
// the five root operators along the duad adjacency (duad D steps to D with
// k replaced by k+1 under root k). Nodes are indexed by duads, the highest
// weight sitting at {1,2}.
struct WeightDiagram {
  uint32_t highest = 0;
  std::array<uint32_t, 15> node_for_duad{};
  struct Edge {
    uint8_t from_duad, to_duad, root;  // root is 1-based
  };
  std::vector<Edge> edges;
};

// Throws std::invalid_argument when a root is not skew-symmetric, the orbit
// leaves `core`, or the multi-path closure is inconsistent. An empty root
// span yields the single-node diagram.
WeightDiagram weight_orbit(const PolarSpace& space, std::span<const uint32_t> roots,
                           uint32_t highest, std::span<const uint32_t> core);

// First (in ascending scan order) quintuple of skew-symmetric operators with
// the A5 chain commutation pattern whose orbit from `highest` is exactly the
// core. Throws if none exists.
std::array<uint32_t, 5> find_root_quintuple(const PolarSpace& space,
                                            std::span<const uint32_t> core,
                                            uint32_t highest);
uint64_t count_root_quintuples(const PolarSpace& space, std::span<const uint32_t> core,
                               uint32_t highest);

// Splits the 35 symmetric operators into the 15 commuting with YYY (the core
// doily) and the 20 anticommuting ones.
std::pair<PointSet, PointSet> partition_35(const PolarSpace& w52);

}  // namespace paulipolar

#endif
