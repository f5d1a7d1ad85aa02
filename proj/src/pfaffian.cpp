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

#include "paulipolar/pfaffian.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace paulipolar {

namespace {

std::complex<double> pfaffian_rec(const ComplexMatrix& a, std::vector<size_t>& idx) {
  if (idx.empty()) return 1.0;
  const size_t i0 = idx[0];
  std::complex<double> sum = 0.0;
  for (size_t k = 1; k < idx.size(); ++k) {
    const std::complex<double> entry = a.at(i0, idx[k]);
    if (entry == std::complex<double>{}) continue;
    std::vector<size_t> rest;
    rest.reserve(idx.size() - 2);
    for (size_t t = 1; t < idx.size(); ++t) {
      if (t != k) rest.push_back(idx[t]);
    }
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    sum += sign * entry * pfaffian_rec(a, rest);
  }
  return sum;
}

}  // namespace

std::complex<double> pfaffian(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) {
    throw std::invalid_argument("pfaffian needs an even-dimensional square matrix");
  }
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      if (a.at(i, j) != -a.at(j, i)) {
        throw std::invalid_argument("pfaffian needs a skew-symmetric matrix");
      }
    }
  }
  std::vector<size_t> idx(a.rows());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(a, idx);
}

PfaffianCheck trace_cube_pfaffian_check(const DuadLabeling& labeling, int samples,
                                        uint64_t seed) {
  if (samples < 2) {
    throw std::invalid_argument("the ratio check needs at least two samples");
  }
  std::vector<ComplexMatrix> mats;
  mats.reserve(15);
  for (int d = 0; d < 15; ++d) {
    mats.push_back(to_matrix(packed_to_operator(labeling.operator_for_duad[d], 3))
                       .scaled(static_cast<double>(labeling.sign[d])));
  }
  const auto& duads = all_duads();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  std::vector<std::complex<double>> ratios;
  while (static_cast<int>(ratios.size()) < samples) {
    std::array<double, 15> a{};
    for (double& x : a) x = coeff(rng);
    ComplexMatrix skew(6, 6);
    for (int d = 0; d < 15; ++d) {
      skew.at(duads[d].a - 1, duads[d].b - 1) = a[d];
      skew.at(duads[d].b - 1, duads[d].a - 1) = -a[d];
    }
    const std::complex<double> pf = pfaffian(skew);
    if (std::abs(pf) < 1e-6) continue;  // resample a degenerate draw
    ComplexMatrix omega(8, 8);
    for (int d = 0; d < 15; ++d) omega.add_scaled(a[d], mats[d]);
    const std::complex<double> t3 = (omega * omega * omega).trace();
    ratios.push_back(t3 / pf);
  }

  std::complex<double> mean = 0.0;
  for (const auto& r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (const auto& r : ratios) spread = std::max(spread, std::abs(r - mean));
  const double relative = spread / std::abs(mean);
  if (!(std::abs(mean) > 0) || relative > 1e-6) {
    throw std::runtime_error("Tr(Omega^3)/Pf(A) is not constant; labeling incompatible");
  }
  return {mean, relative, samples};
}

}  // namespace paulipolar
