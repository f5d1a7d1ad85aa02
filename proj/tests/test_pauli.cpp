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

#include <random>

#include "doctest.h"
#include "paulipolar/dense_matrix.hpp"
#include "paulipolar/json_io.hpp"

using namespace paulipolar;

namespace {

PauliOperator random_operator(std::mt19937_64& rng, uint32_t width) {
  std::uniform_int_distribution<uint32_t> bits(0, (1u << (2 * width)) - 1);
  std::uniform_int_distribution<int> lam(0, 3);
  return {Phase(lam(rng)), SymplecticVector(width, bits(rng))};
}

}  // namespace

TEST_CASE("parse maps single letters to the canonical exponents") {
  auto x = parse_pauli("X");
  CHECK(x.phase().exponent() == 0);
  CHECK(x.vector().mu(0) == 0);
  CHECK(x.vector().nu(0) == 1);

  auto id = parse_pauli("I");
  CHECK(id.phase().exponent() == 0);
  CHECK(id.vector().is_zero());
  CHECK(id.width() == 1);

  auto z = parse_pauli("Z");
  CHECK(z.vector().mu(0) == 1);
  CHECK(z.vector().nu(0) == 0);

  // Y = -i Z X, so the canonical phase exponent is 3.
  auto y = parse_pauli("Y");
  CHECK(y.phase().exponent() == 3);
  CHECK(y.vector().mu(0) == 1);
  CHECK(y.vector().nu(0) == 1);
}

TEST_CASE("parse handles phase prefixes and round-trips through str") {
  CHECK(parse_pauli("iX").phase().exponent() == 1);
  CHECK(parse_pauli("-X").phase().exponent() == 2);
  CHECK(parse_pauli("-iX").phase().exponent() == 3);
  CHECK(parse_pauli("-iYI").phase().exponent() == 2);  // -i * (i^3 ZX) = i^2 ...

  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto op = random_operator(rng, 1 + it % 4);
    CHECK(parse_pauli(op.str()) == op);
  }
}

TEST_CASE("parse reports the offending position") {
  CHECK_THROWS_AS(parse_pauli(""), ParseError);
  CHECK_THROWS_AS(parse_pauli("-"), ParseError);
  CHECK_THROWS_AS(parse_pauli("i"), ParseError);
  try {
    parse_pauli("-iXQZ");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  try {
    parse_pauli("XJ");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
}

TEST_CASE("Y equals -i Z X against the matrix oracle") {
  auto y = to_matrix(parse_pauli("Y"));
  auto zx = to_matrix(parse_pauli("Z") * parse_pauli("X"));
  auto manual = to_matrix(parse_pauli("-iI"));  // -i as a phase-only operator
  CHECK(y == to_matrix(PauliOperator(Phase(3), SymplecticVector(1, 0b11))));
  CHECK(y == manual * zx);
  CHECK(y.at(0, 1) == std::complex<double>(0, -1));
  CHECK(y.at(1, 0) == std::complex<double>(0, 1));
}

TEST_CASE("multiply follows the product phase rule") {
  auto x = parse_pauli("X"), z = parse_pauli("Z");
  auto xz = x * z;
  // X Z = -i Y: matrix [[0,-1],[1,0]].
  CHECK(xz.phase().exponent() == 2);
  CHECK(xz.vector().bits() == 0b11);
  auto m = to_matrix(xz);
  CHECK(m.at(0, 1) == std::complex<double>(-1, 0));
  CHECK(m.at(1, 0) == std::complex<double>(1, 0));
  CHECK(xz == parse_pauli("-iY"));

  // multiply by identity is a no-op.
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    auto op = random_operator(rng, 3);
    CHECK(op * PauliOperator::identity(3) == op);
    CHECK(PauliOperator::identity(3) * op == op);
  }

  CHECK(parse_pauli("XX") * parse_pauli("ZZ") == parse_pauli("-YY"));

  CHECK_THROWS_AS(parse_pauli("XX") * parse_pauli("X"), std::invalid_argument);
}

TEST_CASE("group oracle: products agree with dense matrices") {
  std::mt19937_64 rng(12345);
  for (uint32_t width = 1; width <= 3; ++width) {
    for (int it = 0; it < 340; ++it) {
      auto a = random_operator(rng, width);
      auto b = random_operator(rng, width);
      // Entries are exact Gaussian integers; tolerance 0.
      CHECK(to_matrix(a * b) == to_matrix(a) * to_matrix(b));
    }
  }
}

TEST_CASE("symplectic form decides commutation") {
  auto x = parse_pauli("X"), z = parse_pauli("Z");
  CHECK(symplectic_form(x.vector(), z.vector()) == 1);
  CHECK(symplectic_form(parse_pauli("XX").vector(), parse_pauli("ZZ").vector()) == 0);

  // Exhaustive at N <= 2: form = 0 iff the dense matrices commute.
  for (uint32_t width = 1; width <= 2; ++width) {
    const uint32_t nv = 1u << (2 * width);
    for (uint32_t a = 1; a < nv; ++a) {
      for (uint32_t b = 1; b < nv; ++b) {
        auto oa = packed_to_operator(a, width);
        auto ob = packed_to_operator(b, width);
        bool commute = to_matrix(oa) * to_matrix(ob) == to_matrix(ob) * to_matrix(oa);
        CHECK(commute == (packed_form(a, b) == 0));
      }
    }
  }

  // Random pairs at N = 3.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<uint32_t> bits(1, 63);
  for (int it = 0; it < 200; ++it) {
    uint32_t a = bits(rng), b = bits(rng);
    auto oa = packed_to_operator(a, 3);
    auto ob = packed_to_operator(b, 3);
    bool commute = to_matrix(oa) * to_matrix(ob) == to_matrix(ob) * to_matrix(oa);
    CHECK(commute == (packed_form(a, b) == 0));
  }

  CHECK(symplectic_form(x.vector(), x.vector()) == 0);  // alternating
  CHECK_THROWS_AS(symplectic_form(x.vector(), parse_pauli("XX").vector()),
                  std::invalid_argument);
}

TEST_CASE("every operator squares to a phase-2lambda-ish identity") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    auto op = random_operator(rng, 1 + it % 4);
    auto sq = op * op;
    CHECK(sq.vector().is_zero());
    int expect = (2 * op.phase().exponent() +
                  2 * std::popcount(packed_nu(op.vector().bits()) &
                                    packed_mu(op.vector().bits()))) %
                 4;
    CHECK(sq.phase().exponent() == expect);
    CHECK((sq.phase().exponent() == 0 || sq.phase().exponent() == 2));
  }
}

TEST_CASE("q0 counts Y parity") {
  CHECK(packed_q0(letters_to_packed("YYY")) == 1);
  CHECK(packed_q0(0) == 0);
  CHECK(packed_q0(letters_to_packed("YYI")) == 0);

  for (uint32_t v = 0; v < 64; ++v) {
    int ys = 0;
    for (int j = 0; j < 3; ++j) {
      if (((v >> (2 * j)) & 1) && ((v >> (2 * j + 1)) & 1)) ++ys;
    }
    CHECK(packed_q0(v) == ys % 2);
  }
}

TEST_CASE("qq combines q0 with the form") {
  uint32_t yyy = letters_to_packed("YYY");
  for (uint32_t p = 1; p < 64; ++p) {
    CHECK(packed_qq(0, p) == packed_q0(p));
  }
  CHECK(packed_qq(yyy, letters_to_packed("ZZI")) == 0);
  CHECK(packed_qq(yyy, letters_to_packed("XII")) == 1);
}

TEST_CASE("to_matrix literal forms") {
  auto z = to_matrix(parse_pauli("Z"));
  CHECK(z.at(0, 0) == std::complex<double>(1, 0));
  CHECK(z.at(1, 1) == std::complex<double>(-1, 0));
  CHECK(z.at(0, 1) == std::complex<double>(0, 0));

  CHECK(to_matrix(parse_pauli("II")) == ComplexMatrix::identity(4));

  auto seven = PauliOperator::identity(7);
  CHECK_THROWS_AS(to_matrix(seven), std::invalid_argument);
}

TEST_CASE("projective points drop the phase") {
  auto op = parse_pauli("-iXYZ");
  ProjectivePoint p(op);
  CHECK(p.str() == "XYZ");
  CHECK(p.representative() == parse_pauli("XYZ"));
  CHECK_THROWS_AS(ProjectivePoint(SymplecticVector::zero(2)), std::invalid_argument);
}

TEST_CASE("operator JSON form round-trips") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    auto op = random_operator(rng, 1 + it % 3);
    CHECK(jsonio::pauli_from_json(jsonio::pauli_json(op)) == op);
  }
  // The bits-only encoding defaults the phase exponent to zero.
  CHECK(jsonio::pauli_from_json(R"({"bits":[0,1]})") == parse_pauli("X"));
  CHECK(jsonio::pauli_from_json(R"({"phase_exponent":3,"bits":[1,1]})") ==
        parse_pauli("Y"));
  CHECK_THROWS_AS(jsonio::pauli_from_json(R"({"bits":[0,1,1]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(jsonio::pauli_from_json("nonsense"), std::invalid_argument);
}

TEST_CASE("transvections preserve the form") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<uint32_t> bits(1, 63);
  for (int it = 0; it < 100; ++it) {
    uint32_t q = bits(rng), x = bits(rng), y = bits(rng);
    CHECK(packed_form(transvection(q, x), transvection(q, y)) == packed_form(x, y));
    CHECK(transvection(q, transvection(q, x)) == x);
  }
}
