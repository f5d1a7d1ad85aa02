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

#include "paulipolar/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace paulipolar {

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t j = 0; j < a.cols_; ++j) {
      const Scalar f = a.at(i, j);
      if (f == Scalar{}) continue;
      for (size_t k = 0; k < b.rows_; ++k) {
        for (size_t l = 0; l < b.cols_; ++l) {
          out.at(i * b.rows_ + k, j * b.cols_ + l) = f * b.at(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix dimension mismatch in product");
  }
  ComplexMatrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar f = at(i, k);
      if (f == Scalar{}) continue;
      for (size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) += f * other.at(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix dimension mismatch in sum");
  }
  ComplexMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += other.a_[i];
  return out;
}

ComplexMatrix& ComplexMatrix::add_scaled(Scalar factor, const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix dimension mismatch in sum");
  }
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += factor * other.a_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::scaled(Scalar factor) const {
  ComplexMatrix out = *this;
  for (auto& v : out.a_) v *= factor;
  return out;
}

ComplexMatrix::Scalar ComplexMatrix::trace() const {
  Scalar t{};
  for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  double m = 0;
  for (size_t i = 0; i < a_.size(); ++i) {
    m = std::max(m, std::abs(a_[i] - other.a_[i]));
  }
  return m;
}

ComplexMatrix to_matrix(const PauliOperator& op) {
  if (op.width() > kMaxOracleWidth) {
    throw std::invalid_argument("dense oracle limited to 6 qubits");
  }
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (uint32_t j = 0; j < op.width(); ++j) {
    ComplexMatrix f(2, 2);
    const int mu = op.vector().mu(j), nu = op.vector().nu(j);
    // Z^mu X^nu: one of I, X, Z, ZX = [[0,1],[-1,0]].
    if (mu == 0 && nu == 0) {
      f.at(0, 0) = 1;
      f.at(1, 1) = 1;
    } else if (mu == 0 && nu == 1) {
      f.at(0, 1) = 1;
      f.at(1, 0) = 1;
    } else if (mu == 1 && nu == 0) {
      f.at(0, 0) = 1;
      f.at(1, 1) = -1;
    } else {
      f.at(0, 1) = 1;
      f.at(1, 0) = -1;
    }
    out = ComplexMatrix::kron(out, f);
  }
  return out.scaled(op.phase().value());
}

std::complex<double> determinant(ComplexMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant requires a square matrix");
  }
  const size_t n = m.rows();
  std::complex<double> det = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (std::abs(m.at(r, col)) > std::abs(m.at(pivot, col))) pivot = r;
    }
    if (std::abs(m.at(pivot, col)) == 0.0) return 0.0;
    if (pivot != col) {
      for (size_t c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (size_t r = col + 1; r < n; ++r) {
      const std::complex<double> f = m.at(r, col) / m.at(col, col);
      if (f == std::complex<double>{}) continue;
      for (size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

}  // namespace paulipolar
