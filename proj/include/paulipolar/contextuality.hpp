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

#ifndef PAULIPOLAR_CONTEXTUALITY_HPP
#define PAULIPOLAR_CONTEXTUALITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paulipolar/pauli.hpp"
#include "paulipolar/polar_space.hpp"

namespace paulipolar {

// A context is a set of mutually commuting operators whose product is +I or
// -I; the product can never be +-i I when the members are Hermitian.
// Throws std::invalid_argument when the operators do not pairwise commute or
// their vectors do not cancel, and std::logic_error on a +-i product.
int context_sign(std::span<const PauliOperator> ops);

// Point-context incidence structure with operator labels and context signs.
struct Configuration {
  struct ContextRef {
    std::vector<uint32_t> point_ids;
    int sign = 1;
  };

  std::vector<PauliOperator> points;
  std::vector<ContextRef> contexts;

  // Checks every structural invariant: projectively distinct points, no
  // duplicate contexts, and for each context commutation, vector
  // cancellation and the recorded sign.
  void validate() const;

  // Re-derives every context sign with the dense matrix oracle.
  bool verify_signs_with_matrix_oracle() const;
};

// True iff no +-1 assignment to the points reproduces every context sign,
// i.e. the F2 system M x = s is infeasible.
bool is_magic(const Configuration& config);

// The 9-operator, 6-context square with its single negative context
// {ZZ, XX, YY}.
Configuration mermin_square_canonical();

// The 10-operator, 5-context pentagram with negative context
// {XXX, XZZ, ZXZ, ZZX}.
Configuration mermin_pentagram_canonical();

// The ten 3x3 grids of the doily: point sets are the hyperbolic-quadric
// hyperplanes, contexts their six internal lines.
std::vector<Configuration> enumerate_grids(const PolarSpace& w32);

struct PentagramOptions {
  // Restrict the search to contexts whose points lie in this set.
  std::optional<PointSet> within;
  // Keep the configurations (otherwise only count and certify).
  bool collect = false;
  // 0 = use PAULI_POLAR_THREADS or the hardware concurrency.
  int threads = 0;
};

struct PentagramCensus {
  uint64_t count = 0;
  bool all_magic = true;
  std::vector<Configuration> configurations;  // when collect was set
};

// Enumerates the unordered 5-context, 10-point pentagram configurations of
// W(5,2): valid 4-operator contexts pairwise sharing exactly one point with
// all ten points distinct. Every result is certified through is_magic.
PentagramCensus enumerate_pentagrams(const PolarSpace& w52,
                                     const PentagramOptions& options = {});

// Number of enumerated pentagrams whose ten points all lie in pts.
uint64_t pentagrams_within(const PolarSpace& w52, const PointSet& pts,
                           int threads = 0);

struct GameValue {
  int64_t best_wins = 0;
  int64_t queries = 0;
  // Reduced fraction best_wins / queries.
  int64_t numerator = 0;
  int64_t denominator = 1;
  std::string str() const;
};

// Classical value of the binary constraint game of a 3x3 square
// configuration: Alice answers rows with triples matching the row sign,
// Bob answers columns with triples matching the column sign, and they win
// on agreement at the crossing. Exhaustive over the 4^3 x 4^3 deterministic
// strategy pairs, uniform over the 9 queries.
GameValue classical_game_value(const Configuration& square);

}  // namespace paulipolar

#endif
