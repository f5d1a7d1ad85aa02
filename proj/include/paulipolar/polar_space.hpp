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

#ifndef PAULIPOLAR_POLAR_SPACE_HPP
#define PAULIPOLAR_POLAR_SPACE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "paulipolar/incidence.hpp"
#include "paulipolar/pauli.hpp"

namespace paulipolar {

// Subset of the 2^{2N} packed vectors, one bit per vector value. Bit 0 (the
// zero vector) stays clear in point sets; hyperplane algebra is then plain
// word-wise boolean arithmetic.
class PointSet {
 public:
  explicit PointSet(uint32_t universe_size)
      : universe_(universe_size), words_((universe_size + 63) / 64, 0) {}

  uint32_t universe_size() const { return universe_; }

  void set(uint32_t v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void reset(uint32_t v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  bool test(uint32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

  uint32_t count() const;
  bool contains(const PointSet& other) const;  // superset test
  std::vector<uint32_t> values() const;

  PointSet operator&(const PointSet& o) const;
  PointSet operator|(const PointSet& o) const;
  PointSet operator^(const PointSet& o) const;
  // Complement within the nonzero vectors.
  PointSet complement_points() const;

  bool operator==(const PointSet&) const = default;
  auto operator<=>(const PointSet&) const = default;
  size_t hash() const;

 private:
  uint32_t universe_;
  std::vector<uint64_t> words_;
};

// W(2N-1, 2): all nonzero vectors of F2^{2N} as points, all totally isotropic
// lines, and (for N >= 3) all totally isotropic Fano planes.
class PolarSpace {
 public:
  static constexpr int kMaxQubits = 6;

  struct Options {
    // -1: materialize planes when 3 <= N <= 5 (the N = 6 plane census is the
    // only build step that is not near-instant); 0/1 force off/on.
    int with_planes = -1;
  };

  static PolarSpace build(int n_qubits) { return build(n_qubits, Options()); }
  static PolarSpace build(int n_qubits, const Options& options);

  int n_qubits() const { return n_qubits_; }
  uint32_t vector_count() const { return 1u << (2 * n_qubits_); }
  uint32_t point_count() const { return vector_count() - 1; }
  const std::vector<uint32_t>& points() const { return points_; }
  const std::vector<std::array<uint32_t, 3>>& lines() const { return lines_; }
  const std::vector<std::array<uint32_t, 7>>& planes() const { return planes_; }
  bool planes_materialized() const { return planes_materialized_; }

  PointSet empty_set() const { return PointSet(vector_count()); }
  PointSet full_point_set() const;

  std::string point_str(uint32_t v) const {
    return packed_to_letters(v, n_qubits_);
  }
  uint32_t point_from_str(const std::string& letters) const;

  // The point-line geometry induced on a point subset: the subset's points
  // with every isotropic line entirely inside it.
  PointLineGeometry induced_geometry(const std::vector<uint32_t>& pts) const;

 private:
  PolarSpace() = default;

  int n_qubits_ = 0;
  std::vector<uint32_t> points_;
  std::vector<std::array<uint32_t, 3>> lines_;
  std::vector<std::array<uint32_t, 7>> planes_;
  bool planes_materialized_ = false;
};

enum class HyperplaneType { kPerp, kHyperbolic, kElliptic };

const char* hyperplane_type_name(HyperplaneType t);

struct Hyperplane {
  HyperplaneType type;
  uint32_t q;  // defining vector; q = 0 only for the hyperbolic H_0
  PointSet points;
};

// C_q = {p : <p, q> = 0}, q != 0. Size 2^{2N-1} - 1 and q is a member.
Hyperplane perp_set(const PolarSpace& space, uint32_t q);

// H_q = {p : Q_q(p) = 0}; hyperbolic for Q_0(q) = 0 (2^{2N-1} + 2^{N-1} - 1
// points), elliptic otherwise (2^{2N-1} - 2^{N-1} - 1 points).
Hyperplane quadric(const PolarSpace& space, uint32_t q);

// Every isotropic line meets the set in 1 or 3 points; proper and nonempty.
bool is_hyperplane(const PolarSpace& space, const PointSet& pts);

// Recovers (type, q) by matching against the three parametric families.
// Throws if the set is none of them (not reachable for genuine hyperplanes).
Hyperplane classify_hyperplane(const PolarSpace& space, const PointSet& pts);

// H3 = complement of the symmetric difference; the third point of the
// Veldkamp line through h1 and h2.
Hyperplane veldkamp_sum(const PolarSpace& space, const Hyperplane& h1,
                        const Hyperplane& h2);

struct HyperplaneCensus {
  uint32_t perp = 0;
  uint32_t hyperbolic = 0;
  uint32_t elliptic = 0;
  uint32_t total() const { return perp + hyperbolic + elliptic; }
};

std::vector<Hyperplane> all_hyperplanes(const PolarSpace& space);
HyperplaneCensus hyperplane_census(const PolarSpace& space);

// Independent enumerator for the same census: the mod-2 part of the line
// condition is linear in the characteristic vector of the complement, so the
// full solution space of that system is enumerated and filtered. Exhaustive
// by construction, with no reference to the parametric families.
std::vector<PointSet> enumerate_hyperplanes_exhaustive(const PolarSpace& space);

enum class VeldkampLineType {
  kPerpPerpPerpCollinear,  // three perps, centers on an isotropic line
  kPerpPerpPerpSkew,       // three perps, centers pairwise non-orthogonal
  kPerpHypHyp,
  kPerpHypEll,
  kPerpEllEll,
};

const char* veldkamp_line_type_name(VeldkampLineType t);

struct VeldkampCensus {
  std::map<VeldkampLineType, uint64_t> counts;
  uint64_t total = 0;
  uint32_t hyperplanes = 0;
};

// Full census of hyperplane triples closed under the Veldkamp sum, grouped by
// type. Brute force over hyperplane pairs.
VeldkampCensus veldkamp_lines(const PolarSpace& space);

// The same census from the parameter model (perps <-> nonzero vectors,
// quadrics <-> all vectors) without touching point sets. Used as the second
// route in tests.
VeldkampCensus veldkamp_lines_expected(int n_qubits);

}  // namespace paulipolar

#endif
