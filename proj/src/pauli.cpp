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

#include "paulipolar/pauli.hpp"

namespace paulipolar {

namespace {

// (mu, nu) exponents for each letter.
int letter_bits(char c) {
  switch (c) {
    case 'I':
      return 0b00;
    case 'X':
      return 0b10;  // nu = 1
    case 'Z':
      return 0b01;  // mu = 1
    case 'Y':
      return 0b11;
    default:
      return -1;
  }
}

char bits_letter(int mu, int nu) {
  static constexpr char table[2][2] = {{'I', 'X'}, {'Z', 'Y'}};
  return table[mu][nu];
}

}  // namespace

std::string packed_to_letters(uint32_t bits, uint32_t width) {
  std::string out;
  out.reserve(width);
  for (uint32_t j = 0; j < width; ++j) {
    out.push_back(bits_letter((bits >> (2 * j)) & 1, (bits >> (2 * j + 1)) & 1));
  }
  return out;
}

uint32_t letters_to_packed(std::string_view letters) {
  if (letters.empty() || letters.size() > SymplecticVector::kMaxWidth) {
    throw ParseError("expected between 1 and 16 Pauli letters", 0);
  }
  uint32_t bits = 0;
  for (size_t j = 0; j < letters.size(); ++j) {
    int b = letter_bits(letters[j]);
    if (b < 0) {
      throw ParseError(std::string("invalid Pauli letter '") + letters[j] + "'", j);
    }
    uint32_t mu = b & 1;
    uint32_t nu = (b >> 1) & 1;
    bits |= (mu << (2 * j)) | (nu << (2 * j + 1));
  }
  return bits;
}

PauliOperator packed_to_operator(uint32_t bits, uint32_t width) {
  return {Phase(3 * packed_y_count(bits)), SymplecticVector(width, bits)};
}

PauliOperator parse_pauli(std::string_view text) {
  size_t pos = 0;
  int prefix_exponent = 0;
  if (pos < text.size() && text[pos] == '-') {
    prefix_exponent += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    prefix_exponent += 1;
    ++pos;
  }
  if (pos >= text.size()) {
    throw ParseError("expected Pauli letters after phase prefix", pos);
  }
  std::string_view letters = text.substr(pos);
  if (letters.size() > SymplecticVector::kMaxWidth) {
    throw ParseError("operator wider than 16 qubits", pos);
  }
  uint32_t bits = 0;
  for (size_t j = 0; j < letters.size(); ++j) {
    int b = letter_bits(letters[j]);
    if (b < 0) {
      throw ParseError(std::string("invalid character '") + letters[j] +
                           "' in operator",
                       pos + j);
    }
    uint32_t mu = b & 1;
    uint32_t nu = (b >> 1) & 1;
    bits |= (mu << (2 * j)) | (nu << (2 * j + 1));
  }
  // The letters spell a literal tensor product; each Y contributes i^3 * Z X.
  int lambda = prefix_exponent + 3 * packed_y_count(bits);
  return {Phase(lambda), SymplecticVector(static_cast<uint32_t>(letters.size()), bits)};
}

std::string PauliOperator::str() const {
  int rel = phase_.exponent() - 3 * packed_y_count(vector_.bits());
  std::string out{Phase(rel).prefix()};
  out += packed_to_letters(vector_.bits(), vector_.width());
  return out;
}

std::string ProjectivePoint::str() const {
  return packed_to_letters(vector_.bits(), vector_.width());
}

PauliOperator ProjectivePoint::representative() const {
  return packed_to_operator(vector_.bits(), vector_.width());
}

}  // namespace paulipolar
