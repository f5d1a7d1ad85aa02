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

#ifndef PAULIPOLAR_DENSE_MATRIX_HPP
#define PAULIPOLAR_DENSE_MATRIX_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "paulipolar/pauli.hpp"

namespace paulipolar {

// Small dense complex matrix used as the exact oracle against the symbolic
// Pauli arithmetic. All Pauli entries are Gaussian integers with modulus at
// most 1, so products and Kronecker factors stay exact in double precision.
class ComplexMatrix {
 public:
  using Scalar = std::complex<double>;

  ComplexMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ComplexMatrix identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix& add_scaled(Scalar factor, const ComplexMatrix& other);
  ComplexMatrix scaled(Scalar factor) const;

  Scalar trace() const;
  double max_abs_diff(const ComplexMatrix& other) const;

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

constexpr uint32_t kMaxOracleWidth = 6;

// Literal i^lambda * (Z^mu1 X^nu1) (x) ... as a 2^N x 2^N matrix.
ComplexMatrix to_matrix(const PauliOperator& op);

// LU with partial pivoting; used by the Pfaffian cross-check.
std::complex<double> determinant(ComplexMatrix m);

}  // namespace paulipolar

#endif
