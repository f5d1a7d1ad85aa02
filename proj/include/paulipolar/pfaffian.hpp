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

#ifndef PAULIPOLAR_PFAFFIAN_HPP
#define PAULIPOLAR_PFAFFIAN_HPP

#include <complex>
#include <cstdint>

#include "paulipolar/dense_matrix.hpp"
#include "paulipolar/magic_line.hpp"

namespace paulipolar {

// Signed sum over the perfect matchings of an even-dimensional
// skew-symmetric matrix; Pf(A)^2 = det(A). Throws on odd dimension or a
// non-skew input.
std::complex<double> pfaffian(const ComplexMatrix& a);

struct PfaffianCheck {
  std::complex<double> constant;  // Tr(Omega^3) / Pf(A)
  double relative_spread = 0;     // max deviation from the mean, relative
  int samples = 0;
};

// Draws random coefficient sets a_ij, forms Omega = sum a_ij s_ij O_ij from
// the labeled doily and the skew matrix A = (a_ij), and checks that
// Tr(Omega^3) / Pf(A) is one fixed nonzero constant. Throws when the ratio
// drifts, which means the labeling is not incidence-compatible.
PfaffianCheck trace_cube_pfaffian_check(const DuadLabeling& labeling, int samples,
                                        uint64_t seed);

}  // namespace paulipolar

#endif
