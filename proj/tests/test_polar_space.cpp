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

#include "paulipolar/polar_space.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "paulipolar/incidence.hpp"

using namespace paulipolar;

TEST_CASE("census of small polar spaces") {
  auto w1 = PolarSpace::build(1);
  CHECK(w1.points().size() == 3);
  CHECK(w1.lines().empty());

  auto w2 = PolarSpace::build(2);
  CHECK(w2.points().size() == 15);
  CHECK(w2.lines().size() == 15);

  auto w3 = PolarSpace::build(3);
  CHECK(w3.points().size() == 63);
  CHECK(w3.lines().size() == 315);
  CHECK(w3.planes_materialized());
  CHECK(w3.planes().size() == 135);

  CHECK_THROWS_AS(PolarSpace::build(0), std::invalid_argument);
  CHECK_THROWS_AS(PolarSpace::build(7), std::invalid_argument);
}

TEST_CASE("lines are isotropic and closed under addition") {
  auto w3 = PolarSpace::build(3);
  for (const auto& [a, b, c] : w3.lines()) {
    CHECK((a ^ b) == c);
    CHECK(packed_form(a, b) == 0);
    CHECK(packed_form(a, c) == 0);
    CHECK(packed_form(b, c) == 0);
  }
  for (const auto& plane : w3.planes()) {
    for (uint32_t x : plane) {
      for (uint32_t y : plane) {
        CHECK(packed_form(x, y) == 0);
        if (x != y) CHECK(std::count(plane.begin(), plane.end(), x ^ y) == 1);
      }
    }
  }
}

TEST_CASE("the doily is the generalized quadrangle GQ(2,2)") {
  auto w2 = PolarSpace::build(2);
  PointLineGeometry g = w2.induced_geometry(w2.points());
  CHECK(g.lines.size() == 15);
  CHECK(satisfies_gq_axioms(g, 2, 2));
  CHECK(!has_triangle(g));
}

TEST_CASE("perp sets have size 2^(2N-1)-1 and contain their center") {
  auto w2 = PolarSpace::build(2);
  uint32_t xx = w2.point_from_str("XX");
  Hyperplane h = perp_set(w2, xx);
  CHECK(h.points.count() == 7);
  CHECK(h.points.test(xx));
  CHECK(h.type == HyperplaneType::kPerp);

  auto w3 = PolarSpace::build(3);
  uint32_t yyy = w3.point_from_str("YYY");
  Hyperplane c_yyy = perp_set(w3, yyy);
  CHECK(c_yyy.points.count() == 31);

  // Every line through the center stays inside the perp set.
  for (const auto& [a, b, c] : w3.lines()) {
    if (a == yyy || b == yyy || c == yyy) {
      CHECK(c_yyy.points.test(a));
      CHECK(c_yyy.points.test(b));
      CHECK(c_yyy.points.test(c));
    }
  }

  CHECK_THROWS_AS(perp_set(w2, 0), std::invalid_argument);
}

TEST_CASE("quadrics have the hyperbolic and elliptic sizes") {
  auto w3 = PolarSpace::build(3);
  Hyperplane h0 = quadric(w3, 0);
  CHECK(h0.type == HyperplaneType::kHyperbolic);
  CHECK(h0.points.count() == 35);

  Hyperplane hy = quadric(w3, w3.point_from_str("YYY"));
  CHECK(hy.type == HyperplaneType::kElliptic);
  CHECK(hy.points.count() == 27);

  auto w2 = PolarSpace::build(2);
  CHECK(quadric(w2, 0).points.count() == 9);
  // A skew parameter gives the 5-point ovoid; a symmetric one such as YY
  // gives another 9-point grid.
  Hyperplane ovoid = quadric(w2, w2.point_from_str("XY"));
  CHECK(ovoid.type == HyperplaneType::kElliptic);
  CHECK(ovoid.points.count() == 5);
  Hyperplane yy = quadric(w2, w2.point_from_str("YY"));
  CHECK(yy.type == HyperplaneType::kHyperbolic);
  CHECK(yy.points.count() == 9);
}

TEST_CASE("is_hyperplane accepts the families and rejects the full set") {
  auto w2 = PolarSpace::build(2);
  CHECK(is_hyperplane(w2, perp_set(w2, 3).points));
  CHECK(is_hyperplane(w2, quadric(w2, 0).points));
  CHECK(!is_hyperplane(w2, w2.full_point_set()));
  CHECK(!is_hyperplane(w2, w2.empty_set()));

  PointSet one = w2.empty_set();
  one.set(w2.point_from_str("XY"));
  CHECK(!is_hyperplane(w2, one));
}

TEST_CASE("classification round-trips for every parameter") {
  for (int n : {2, 3}) {
    auto space = PolarSpace::build(n);
    for (uint32_t q = 1; q < space.vector_count(); ++q) {
      Hyperplane h = classify_hyperplane(space, perp_set(space, q).points);
      CHECK(h.type == HyperplaneType::kPerp);
      CHECK(h.q == q);
    }
    for (uint32_t q = 0; q < space.vector_count(); ++q) {
      Hyperplane h = classify_hyperplane(space, quadric(space, q).points);
      CHECK(h.type == (packed_q0(q) == 0 ? HyperplaneType::kHyperbolic
                                         : HyperplaneType::kElliptic));
      CHECK(h.q == q);
    }
  }
}

TEST_CASE("hyperplane census matches the parametric and exhaustive routes") {
  auto w2 = PolarSpace::build(2);
  HyperplaneCensus c2 = hyperplane_census(w2);
  CHECK(c2.perp == 15);
  CHECK(c2.hyperbolic == 10);
  CHECK(c2.elliptic == 6);
  CHECK(c2.total() == 31);

  auto exhaustive2 = enumerate_hyperplanes_exhaustive(w2);
  CHECK(exhaustive2.size() == 31);
  std::set<std::vector<uint32_t>> from_linear, from_parametric;
  for (const auto& s : exhaustive2) from_linear.insert(s.values());
  for (const auto& h : all_hyperplanes(w2)) from_parametric.insert(h.points.values());
  CHECK(from_linear == from_parametric);

  // Cross-check with the generic subset scan on the doily's abstract geometry.
  PointLineGeometry g = w2.induced_geometry(w2.points());
  CHECK(enumerate_hyperplanes_subsets(g).size() == 31);

  auto w3 = PolarSpace::build(3);
  HyperplaneCensus c3 = hyperplane_census(w3);
  CHECK(c3.perp == 63);
  CHECK(c3.hyperbolic == 36);
  CHECK(c3.elliptic == 28);
  CHECK(c3.total() == 127);
  CHECK(c3.total() == (1u << (2 * 3 + 1)) - 1);
  CHECK(c2.total() == (1u << (2 * 2 + 1)) - 1);

  auto exhaustive3 = enumerate_hyperplanes_exhaustive(w3);
  CHECK(exhaustive3.size() == 127);
  for (const auto& s : exhaustive3) {
    CHECK(is_hyperplane(w3, s));
    CHECK_NOTHROW(classify_hyperplane(w3, s));
  }
}

TEST_CASE("classify rejects sets outside the three families") {
  auto w2 = PolarSpace::build(2);
  PointSet junk = w2.empty_set();
  junk.set(1);
  junk.set(2);
  CHECK_THROWS_AS(classify_hyperplane(w2, junk), std::logic_error);
}

TEST_CASE("the degenerate N=1 census has no elliptic hyperplane") {
  auto w1 = PolarSpace::build(1);
  HyperplaneCensus census = hyperplane_census(w1);
  CHECK(census.perp == 3);
  CHECK(census.hyperbolic == 3);
  CHECK(census.elliptic == 0);
}

TEST_CASE("veldkamp sum identities hold for all parameter pairs") {
  for (int n : {2, 3}) {
    auto space = PolarSpace::build(n);
    const uint32_t nv = space.vector_count();
    for (uint32_t p = 1; p < nv; ++p) {
      for (uint32_t q = 1; q < nv; ++q) {
        if (p == q) continue;
        Hyperplane sum = veldkamp_sum(space, perp_set(space, p), perp_set(space, q));
        CHECK(sum.type == HyperplaneType::kPerp);
        CHECK(sum.q == (p ^ q));
      }
    }
    for (uint32_t p = 0; p < nv; ++p) {
      for (uint32_t q = 0; q < nv; ++q) {
        if (p == q) continue;
        Hyperplane sum = veldkamp_sum(space, quadric(space, p), quadric(space, q));
        CHECK(sum.type == HyperplaneType::kPerp);
        CHECK(sum.q == (p ^ q));
      }
    }
    for (uint32_t p = 1; p < nv; ++p) {
      for (uint32_t q = 0; q < nv; ++q) {
        Hyperplane sum = veldkamp_sum(space, perp_set(space, p), quadric(space, q));
        CHECK(sum.q == (p ^ q));
        CHECK(sum.type == (packed_q0(p ^ q) == 0 ? HyperplaneType::kHyperbolic
                                                 : HyperplaneType::kElliptic));
      }
    }
  }
}

TEST_CASE("veldkamp sum is involutive") {
  auto w2 = PolarSpace::build(2);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<uint32_t> pick(1, 15);
  for (int it = 0; it < 50; ++it) {
    Hyperplane h1 = perp_set(w2, pick(rng));
    Hyperplane h2 = quadric(w2, pick(rng));
    Hyperplane h3 = veldkamp_sum(w2, h1, h2);
    CHECK(veldkamp_sum(w2, h1, h3).points == h2.points);
  }
  Hyperplane h = perp_set(w2, 5);
  CHECK_THROWS_AS(veldkamp_sum(w2, h, h), std::invalid_argument);
}

TEST_CASE("doily veldkamp census: 155 lines in 5 types") {
  auto w2 = PolarSpace::build(2);
  VeldkampCensus census = veldkamp_lines(w2);
  CHECK(census.hyperplanes == 31);
  CHECK(census.total == 155);
  CHECK(census.counts.at(VeldkampLineType::kPerpPerpPerpCollinear) == 15);
  CHECK(census.counts.at(VeldkampLineType::kPerpPerpPerpSkew) == 20);
  CHECK(census.counts.at(VeldkampLineType::kPerpHypHyp) == 45);
  CHECK(census.counts.at(VeldkampLineType::kPerpHypEll) == 60);
  CHECK(census.counts.at(VeldkampLineType::kPerpEllEll) == 15);

  VeldkampCensus expected = veldkamp_lines_expected(2);
  CHECK(expected.total == census.total);
  CHECK(expected.counts == census.counts);

  // 31 points + 155 lines is the projective space PG(4,2).
  CHECK(census.hyperplanes == 31);
  CHECK(census.total == 155);
}

TEST_CASE("W(5,2) veldkamp census by tag triple") {
  auto w3 = PolarSpace::build(3, {.with_planes = 0});
  VeldkampCensus census = veldkamp_lines(w3);
  CHECK(census.hyperplanes == 127);
  CHECK(census.total == 2667);
  CHECK(census.counts.at(VeldkampLineType::kPerpPerpPerpCollinear) == 315);
  CHECK(census.counts.at(VeldkampLineType::kPerpPerpPerpSkew) == 336);
  CHECK(census.counts.at(VeldkampLineType::kPerpHypHyp) == 630);
  CHECK(census.counts.at(VeldkampLineType::kPerpHypEll) == 1008);
  CHECK(census.counts.at(VeldkampLineType::kPerpEllEll) == 378);
  CHECK(veldkamp_lines_expected(3).counts == census.counts);
}

TEST_CASE("grid GQ(2,1) hyperplane census: 9 perps, 6 ovoids") {
  PointLineGeometry grid = grid_gq21();
  auto planes = enumerate_hyperplanes_subsets(grid);
  CHECK(planes.size() == 15);
  int with_line = 0, ovoids = 0;
  for (const auto& subset : planes) {
    (subset_contains_line(grid, subset) ? with_line : ovoids) += 1;
  }
  CHECK(with_line == 9);
  CHECK(ovoids == 6);
}

TEST_CASE("transvections fix the line set and permute hyperplanes") {
  auto w3 = PolarSpace::build(3, {.with_planes = 0});
  std::set<std::array<uint32_t, 3>> line_set(w3.lines().begin(), w3.lines().end());
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<uint32_t> pick(1, 63);
  for (int it = 0; it < 10; ++it) {
    uint32_t t = pick(rng);
    for (const auto& [a, b, c] : w3.lines()) {
      std::array<uint32_t, 3> image = {transvection(t, a), transvection(t, b),
                                       transvection(t, c)};
      std::sort(image.begin(), image.end());
      CHECK(line_set.count(image) == 1);
    }
    Hyperplane h = quadric(w3, pick(rng));
    PointSet moved = w3.empty_set();
    for (uint32_t v : h.points.values()) moved.set(transvection(t, v));
    CHECK(is_hyperplane(w3, moved));
    CHECK_NOTHROW(classify_hyperplane(w3, moved));
  }
}

TEST_CASE("point strings round-trip") {
  auto w3 = PolarSpace::build(3, {.with_planes = 0});
  for (uint32_t v : w3.points()) {
    CHECK(w3.point_from_str(w3.point_str(v)) == v);
  }
  CHECK_THROWS_AS(w3.point_from_str("III"), std::invalid_argument);
  CHECK_THROWS_AS(w3.point_from_str("XX"), std::invalid_argument);
}
