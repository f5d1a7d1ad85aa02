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

#ifndef PAULIPOLAR_ENTANGLEMENT_HPP
#define PAULIPOLAR_ENTANGLEMENT_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "paulipolar/polynomial.hpp"

namespace paulipolar {

constexpr double kDefaultEps = 1e-8;

// Complex multiway array of amplitudes in row-major order (multi-indices
// ordered lexicographically).
struct StateTensor {
  std::vector<int> format;
  std::vector<std::complex<double>> amplitudes;

  static StateTensor zeros(std::vector<int> format);
  size_t flat_size() const;
  size_t flat_index(std::span<const int> idx) const;
  std::complex<double>& at(std::span<const int> idx);
  const std::complex<double>& at(std::span<const int> idx) const;
  double norm() const;
  bool is_zero() const;
};

// Local operators g_f (row-major d_f x d_f) acting on each factor.
StateTensor apply_local_operators(
    const StateTensor& t, const std::vector<std::vector<std::complex<double>>>& ops);

// Random matrix with entries uniform in the unit disk, scaled to determinant
// one. Throws only for d < 1.
std::vector<std::complex<double>> random_det1_matrix(int d, std::mt19937_64& rng);

// a00 a11 - a01 a10 up to eps * |t|^2.
bool two_qubit_separable(const StateTensor& t, double eps = kDefaultEps);

// Numeric ranks of the three 2x4 flattenings of a (2,2,2) tensor.
std::array<int, 3> flattening_ranks(const StateTensor& t, double eps = kDefaultEps);

// Cayley's quartic hyperdeterminant of format 2x2x2.
std::complex<double> cayley_hyperdet(const StateTensor& t);

enum class SloccClass3Qubit { kZero, kSep, kB1, kB2, kB3, kW, kGhz };
const char* slocc_class_name(SloccClass3Qubit c);

struct SloccClassification {
  SloccClass3Qubit slocc_class = SloccClass3Qubit::kZero;
  double hyperdet_abs = 0;             // |Delta|
  double hyperdet_abs_normalized = 0;  // |Delta| / |t|^4, the class test value
  std::array<int, 3> ranks = {0, 0, 0};
  double norm = 0;
};

// ZERO / GHZ by |Delta| > eps |t|^4 / biseparable classes by flattening
// ranks / W for full flattening ranks with vanishing hyperdeterminant.
SloccClassification classify_3qubit(const StateTensor& t, double eps = kDefaultEps);

struct SecantOptions {
  int repeats = 20;
  uint64_t seed = 0;
  bool symmetric = false;  // Veronese of one factor instead of the Segre
  double eps = kDefaultEps;
};

// Affine dimension of the k-th secant variety of the Segre (or Veronese)
// via Terracini: numeric rank of stacked tangent bases at k random points.
// All repeats must produce the same integer; throws otherwise.
int secant_dimension_estimate(std::span<const int> format, int k);
int secant_dimension_estimate(std::span<const int> format, int k,
                              const SecantOptions& options);

struct ZakReport {
  int x_dimension = 0;           // projective dim of the separable variety
  int expected_projective = 0;   // 2 dim + 1
  int actual_projective = 0;     // measured dim of sigma_2
  int ambient_projective = 0;
  bool tau_equals_sigma2 = false;  // branch 2 of the dichotomy
};

ZakReport zak_dichotomy(std::span<const int> format);
ZakReport zak_dichotomy(std::span<const int> format, const SecantOptions& options);

// f_psi = sum a_J x^1_{J_1} ... x^n_{J_n} on sum d_f variables ordered
// factor by factor.
Polynomial hyperplane_section_poly(const StateTensor& t);

struct LocalGerm {
  Polynomial poly;
  std::vector<std::string> variables;
};

// Sets coordinate chart[f] of factor f to one; the others become the affine
// chart variables (named x, y, z, t for up to four, x1..xm beyond).
LocalGerm chart_localize(const StateTensor& t, std::span<const int> chart);

struct SingularOptions {
  double eps = kDefaultEps;
  int max_truncation = 12;
};

struct SingularityAnalysis {
  bool is_singular = false;
  int hessian_corank = 0;
  int milnor_number = -1;  // -1 when not isolated
  bool isolated = false;
  int truncation_used = 0;
};

// Gradient / Hessian / Milnor number of the germ at the origin. The Milnor
// number is the dimension of the local algebra, computed by linear algebra
// on monomials up to an increasing truncation degree until the dimension
// stabilizes with the full top layer inside the Jacobian ideal. Throws when
// the origin is not a critical point of the germ.
SingularityAnalysis singular_point_analysis(const LocalGerm& germ);
SingularityAnalysis singular_point_analysis(const LocalGerm& germ,
                                            const SingularOptions& options);

enum class SingularityType { kA1, kA2, kA3, kD4, kOther };
const char* singularity_type_name(SingularityType t);

// A_k for corank <= 1 and mu = k <= 3; D4 for corank 2, mu = 4 and a
// nondegenerate cubic on the Hessian kernel; OTHER otherwise. Throws on a
// non-isolated analysis.
SingularityType singularity_type(const LocalGerm& germ,
                                 const SingularityAnalysis& analysis);
SingularityType singularity_type(const LocalGerm& germ,
                                 const SingularityAnalysis& analysis, double eps);

}  // namespace paulipolar

#endif
