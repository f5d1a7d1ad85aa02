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

#ifndef PAULIPOLAR_PAULI_HPP
#define PAULIPOLAR_PAULI_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paulipolar {

// An N-qubit Pauli operator is stored in canonical form
//
//     O = i^lambda * Z^mu1 X^nu1 (x) ... (x) Z^muN X^nuN,
//
// with lambda in Z4 and the exponent word packed as mu_j at bit 2(j-1),
// nu_j at bit 2(j-1)+1. Two operators are equal iff (lambda, word) agree.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Power of i.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int exponent)
      : exponent_(static_cast<uint8_t>(((exponent % 4) + 4) % 4)) {}

  constexpr int exponent() const { return exponent_; }
  constexpr Phase operator*(Phase other) const {
    return Phase(exponent_ + other.exponent_);
  }
  std::complex<double> value() const {
    constexpr std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[exponent_];
  }
  // Text prefix used by the operator grammar: "", "i", "-", "-i".
  std::string_view prefix() const {
    constexpr std::string_view table[4] = {"", "i", "-", "-i"};
    return table[exponent_];
  }
  constexpr bool operator==(const Phase&) const = default;

 private:
  uint8_t exponent_ = 0;
};

// Helpers on packed coordinate words. Even bits hold the Z exponents (mu),
// odd bits the X exponents (nu).
constexpr uint32_t kMuMask = 0x55555555u;

constexpr uint32_t packed_mu(uint32_t v) { return v & kMuMask; }
constexpr uint32_t packed_nu(uint32_t v) { return (v >> 1) & kMuMask; }

// <u, v> = sum_j (mu_j nu'_j + mu'_j nu_j) mod 2; zero iff the operators
// commute.
constexpr int packed_form(uint32_t u, uint32_t v) {
  return std::popcount((packed_mu(u) & packed_nu(v)) ^
                       (packed_mu(v) & packed_nu(u))) &
         1;
}

// Q_0(v) = sum_j mu_j nu_j mod 2: the parity of the number of Y factors.
constexpr int packed_q0(uint32_t v) {
  return std::popcount(packed_mu(v) & packed_nu(v)) & 1;
}

// Q_q(p) = Q_0(p) + <q, p>.
constexpr int packed_qq(uint32_t q, uint32_t p) {
  return packed_q0(p) ^ packed_form(q, p);
}

constexpr int packed_y_count(uint32_t v) {
  return std::popcount(packed_mu(v) & packed_nu(v));
}

// Symplectic transvection x -> x + <x, q> q; permutes the nonzero vectors and
// preserves the form.
constexpr uint32_t transvection(uint32_t q, uint32_t x) {
  return packed_form(x, q) ? (x ^ q) : x;
}

// Element of F2^{2N} with the (mu1, nu1, ..., muN, nuN) layout.
class SymplecticVector {
 public:
  static constexpr uint32_t kMaxWidth = 16;

  SymplecticVector(uint32_t width, uint32_t bits) : width_(width), bits_(bits) {
    if (width < 1 || width > kMaxWidth) {
      throw std::invalid_argument("symplectic vector width out of range");
    }
    if (width < kMaxWidth && (bits >> (2 * width)) != 0) {
      throw std::invalid_argument("symplectic vector has bits beyond its width");
    }
  }
  static SymplecticVector zero(uint32_t width) { return {width, 0}; }

  uint32_t width() const { return width_; }
  uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  int mu(uint32_t qubit) const { return (bits_ >> (2 * qubit)) & 1; }
  int nu(uint32_t qubit) const { return (bits_ >> (2 * qubit + 1)) & 1; }

  SymplecticVector operator+(const SymplecticVector& other) const {
    check_same_width(other);
    return {width_, bits_ ^ other.bits_};
  }
  bool operator==(const SymplecticVector&) const = default;

  void check_same_width(const SymplecticVector& other) const {
    if (width_ != other.width_) {
      throw std::invalid_argument("symplectic vector width mismatch");
    }
  }

 private:
  uint32_t width_;
  uint32_t bits_;
};

inline int symplectic_form(const SymplecticVector& u, const SymplecticVector& v) {
  u.check_same_width(v);
  return packed_form(u.bits(), v.bits());
}

inline int q0(const SymplecticVector& v) { return packed_q0(v.bits()); }

inline int qq(const SymplecticVector& q, const SymplecticVector& p) {
  q.check_same_width(p);
  return packed_qq(q.bits(), p.bits());
}

class PauliOperator {
 public:
  PauliOperator(Phase phase, SymplecticVector vector)
      : phase_(phase), vector_(vector) {}

  static PauliOperator identity(uint32_t width) {
    return {Phase(0), SymplecticVector::zero(width)};
  }

  Phase phase() const { return phase_; }
  const SymplecticVector& vector() const { return vector_; }
  uint32_t width() const { return vector_.width(); }

  // Matrix product in canonical form. The phase picks up (-1)^{nu_a . mu_b}
  // from commuting the left factor's X block past the right factor's Z block.
  PauliOperator operator*(const PauliOperator& other) const {
    vector_.check_same_width(other.vector_);
    int cross = std::popcount(packed_nu(vector_.bits()) &
                              packed_mu(other.vector_.bits()));
    return {Phase(phase_.exponent() + other.phase_.exponent() + 2 * cross),
            vector_ + other.vector_};
  }

  bool operator==(const PauliOperator&) const = default;

  std::string str() const;

 private:
  Phase phase_;
  SymplecticVector vector_;
};

// Parses `["-"]["i"] ("I"|"X"|"Y"|"Z"){N}`. The result equals the literal
// tensor product of the named Paulis times the prefix phase.
PauliOperator parse_pauli(std::string_view text);

// Point of PG(2N-1, 2): a Pauli operator with the phase discarded.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(SymplecticVector vector) : vector_(vector) {
    if (vector.is_zero()) {
      throw std::invalid_argument("projective point must be nonzero");
    }
  }
  explicit ProjectivePoint(const PauliOperator& op)
      : ProjectivePoint(op.vector()) {}

  const SymplecticVector& vector() const { return vector_; }
  uint32_t bits() const { return vector_.bits(); }
  uint32_t width() const { return vector_.width(); }

  // Letters without a phase prefix.
  std::string str() const;
  // The Hermitian operator spelled by the letters (e.g. "Y" has lambda = 3).
  PauliOperator representative() const;

  bool operator==(const ProjectivePoint&) const = default;

 private:
  SymplecticVector vector_;
};

// Letters of a packed vector, e.g. 0b1101 (width 2) -> "YZ".
std::string packed_to_letters(uint32_t bits, uint32_t width);
// Inverse of packed_to_letters; accepts I/X/Y/Z only.
uint32_t letters_to_packed(std::string_view letters);
// Hermitian representative of a packed vector (phase exponent 3 * #Y mod 4).
PauliOperator packed_to_operator(uint32_t bits, uint32_t width);

}  // namespace paulipolar

#endif
