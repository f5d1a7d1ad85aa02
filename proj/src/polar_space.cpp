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
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace paulipolar {

uint32_t PointSet::count() const {
  uint32_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool PointSet::contains(const PointSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (other.words_[i] & ~words_[i]) return false;
  }
  return true;
}

std::vector<uint32_t> PointSet::values() const {
  std::vector<uint32_t> out;
  out.reserve(count());
  for (uint32_t v = 0; v < universe_; ++v) {
    if (test(v)) out.push_back(v);
  }
  return out;
}

PointSet PointSet::operator&(const PointSet& o) const {
  PointSet r = *this;
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}
PointSet PointSet::operator|(const PointSet& o) const {
  PointSet r = *this;
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}
PointSet PointSet::operator^(const PointSet& o) const {
  PointSet r = *this;
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= o.words_[i];
  return r;
}

PointSet PointSet::complement_points() const {
  PointSet r = *this;
  for (auto& w : r.words_) w = ~w;
  // Mask the zero vector and any slack beyond the universe.
  r.words_[0] &= ~uint64_t{1};
  const uint32_t tail = universe_ & 63;
  if (tail != 0) r.words_.back() &= (uint64_t{1} << tail) - 1;
  return r;
}

size_t PointSet::hash() const {
  size_t h = 1469598103934665603ull;
  for (uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

PolarSpace PolarSpace::build(int n_qubits, const Options& options) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("polar space supports 1 to 6 qubits");
  }
  PolarSpace s;
  s.n_qubits_ = n_qubits;
  const uint32_t nv = s.vector_count();

  s.points_.reserve(nv - 1);
  for (uint32_t v = 1; v < nv; ++v) s.points_.push_back(v);

  // {a, b, a^b} is isotropic iff <a,b> = 0; keep the representative with
  // a < b < a^b (the xor of the two smaller members is always the largest).
  for (uint32_t a = 1; a < nv; ++a) {
    for (uint32_t b = a + 1; b < nv; ++b) {
      const uint32_t c = a ^ b;
      if (c > b && packed_form(a, b) == 0) {
        s.lines_.push_back({a, b, c});
      }
    }
  }
  std::sort(s.lines_.begin(), s.lines_.end());

  const bool want_planes =
      options.with_planes == 1 ||
      (options.with_planes < 0 && n_qubits >= 3 && n_qubits <= 5);
  if (n_qubits >= 3 && want_planes) {
    // Extend each isotropic line by an orthogonal outside point; the span is
    // a totally isotropic Fano plane. Dedupe on the sorted 7-tuple.
    std::unordered_set<uint64_t> seen;
    for (const auto& [a, b, c] : s.lines_) {
      for (uint32_t p = 1; p < nv; ++p) {
        if (p == a || p == b || p == c) continue;
        if (packed_form(a, p) != 0 || packed_form(b, p) != 0) continue;
        std::array<uint32_t, 7> plane = {a, b, c, p, a ^ p, b ^ p, c ^ p};
        std::sort(plane.begin(), plane.end());
        uint64_t key = 0;
        for (uint32_t v : plane) key = key * 4096 + v;
        if (seen.insert(key).second) s.planes_.push_back(plane);
      }
    }
    std::sort(s.planes_.begin(), s.planes_.end());
    s.planes_materialized_ = true;
  }
  return s;
}

PointSet PolarSpace::full_point_set() const {
  PointSet r = empty_set();
  for (uint32_t v = 1; v < vector_count(); ++v) r.set(v);
  return r;
}

uint32_t PolarSpace::point_from_str(const std::string& letters) const {
  if (letters.size() != static_cast<size_t>(n_qubits_)) {
    throw std::invalid_argument("operator width does not match the space");
  }
  uint32_t v = letters_to_packed(letters);
  if (v == 0) {
    throw std::invalid_argument("the identity is not a projective point");
  }
  return v;
}

PointLineGeometry PolarSpace::induced_geometry(const std::vector<uint32_t>& pts) const {
  PointLineGeometry g;
  g.n_points = static_cast<uint32_t>(pts.size());
  std::unordered_map<uint32_t, uint32_t> index;
  for (uint32_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;
  for (const auto& [a, b, c] : lines_) {
    auto ia = index.find(a), ib = index.find(b), ic = index.find(c);
    if (ia != index.end() && ib != index.end() && ic != index.end()) {
      g.lines.push_back({ia->second, ib->second, ic->second});
    }
  }
  return g;
}

const char* hyperplane_type_name(HyperplaneType t) {
  switch (t) {
    case HyperplaneType::kPerp:
      return "perp";
    case HyperplaneType::kHyperbolic:
      return "hyperbolic";
    case HyperplaneType::kElliptic:
      return "elliptic";
  }
  return "?";
}

Hyperplane perp_set(const PolarSpace& space, uint32_t q) {
  if (q == 0 || q >= space.vector_count()) {
    throw std::invalid_argument("perp set requires a nonzero point");
  }
  PointSet pts = space.empty_set();
  for (uint32_t v = 1; v < space.vector_count(); ++v) {
    if (packed_form(v, q) == 0) pts.set(v);
  }
  return {HyperplaneType::kPerp, q, pts};
}

Hyperplane quadric(const PolarSpace& space, uint32_t q) {
  if (q >= space.vector_count()) {
    throw std::invalid_argument("quadric parameter out of range");
  }
  PointSet pts = space.empty_set();
  for (uint32_t v = 1; v < space.vector_count(); ++v) {
    if (packed_qq(q, v) == 0) pts.set(v);
  }
  return {packed_q0(q) == 0 ? HyperplaneType::kHyperbolic : HyperplaneType::kElliptic,
          q, pts};
}

bool is_hyperplane(const PolarSpace& space, const PointSet& pts) {
  const uint32_t n = pts.count();
  if (n == 0 || n == space.point_count()) return false;
  for (const auto& [a, b, c] : space.lines()) {
    const int hits = int(pts.test(a)) + int(pts.test(b)) + int(pts.test(c));
    if (hits != 1 && hits != 3) return false;
  }
  return true;
}

Hyperplane classify_hyperplane(const PolarSpace& space, const PointSet& pts) {
  for (uint32_t q = 1; q < space.vector_count(); ++q) {
    Hyperplane h = perp_set(space, q);
    if (h.points == pts) return h;
  }
  for (uint32_t q = 0; q < space.vector_count(); ++q) {
    Hyperplane h = quadric(space, q);
    if (h.points == pts) return h;
  }
  throw std::logic_error(
      "point set is a hyperplane of none of the three forms; "
      "the construction that produced it is buggy");
}

Hyperplane veldkamp_sum(const PolarSpace& space, const Hyperplane& h1,
                        const Hyperplane& h2) {
  if (h1.points == h2.points) {
    throw std::invalid_argument("Veldkamp sum needs two distinct hyperplanes");
  }
  PointSet sum = (h1.points ^ h2.points).complement_points();
  return classify_hyperplane(space, sum);
}

std::vector<Hyperplane> all_hyperplanes(const PolarSpace& space) {
  std::vector<Hyperplane> out;
  out.reserve(2 * space.vector_count() - 1);
  for (uint32_t q = 1; q < space.vector_count(); ++q) out.push_back(perp_set(space, q));
  for (uint32_t q = 0; q < space.vector_count(); ++q) out.push_back(quadric(space, q));
  return out;
}

HyperplaneCensus hyperplane_census(const PolarSpace& space) {
  HyperplaneCensus census;
  std::unordered_set<size_t> seen;
  for (const Hyperplane& h : all_hyperplanes(space)) {
    if (!seen.insert(h.points.hash()).second) continue;
    // At N = 1 the elliptic zero set is empty and not a proper hyperplane.
    if (!is_hyperplane(space, h.points)) continue;
    switch (h.type) {
      case HyperplaneType::kPerp:
        ++census.perp;
        break;
      case HyperplaneType::kHyperbolic:
        ++census.hyperbolic;
        break;
      case HyperplaneType::kElliptic:
        ++census.elliptic;
        break;
    }
  }
  return census;
}

std::vector<PointSet> enumerate_hyperplanes_exhaustive(const PolarSpace& space) {
  // Unknowns: one bit per point, the characteristic vector of the hyperplane
  // complement S. A line (a,b,c) meets S in 0 or 2 points, so
  // x_a + x_b + x_c = 0 over F2; solutions with a line inside S are rejected
  // afterwards, as is the empty S (the full set is not a proper hyperplane).
  const uint32_t nv = space.vector_count();
  std::vector<PointSet> rows;
  rows.reserve(space.lines().size());
  for (const auto& [a, b, c] : space.lines()) {
    PointSet r = space.empty_set();
    r.set(a);
    r.set(b);
    r.set(c);
    rows.push_back(r);
  }

  // Gaussian elimination to a null-space basis.
  std::vector<uint32_t> pivot_col;
  size_t rank = 0;
  for (uint32_t col = 1; col < nv && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && !rows[sel].test(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) rows[r] = rows[r] ^ rows[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(nv, false);
  for (uint32_t c : pivot_col) is_pivot[c] = true;
  std::vector<uint32_t> free_cols;
  for (uint32_t v = 1; v < nv; ++v) {
    if (!is_pivot[v]) free_cols.push_back(v);
  }
  std::vector<PointSet> basis;
  for (uint32_t f : free_cols) {
    PointSet sol = space.empty_set();
    sol.set(f);
    for (size_t r = 0; r < rank; ++r) {
      if (rows[r].test(f)) sol.set(pivot_col[r]);
    }
    basis.push_back(sol);
  }
  if (basis.size() > 24) {
    throw std::logic_error("hyperplane solution space unexpectedly large");
  }

  std::vector<PointSet> out;
  const uint64_t combos = uint64_t{1} << basis.size();
  for (uint64_t m = 1; m < combos; ++m) {
    PointSet s = space.empty_set();
    for (size_t i = 0; i < basis.size(); ++i) {
      if ((m >> i) & 1) s = s ^ basis[i];
    }
    bool line_inside = false;
    for (const auto& [a, b, c] : space.lines()) {
      if (s.test(a) && s.test(b) && s.test(c)) {
        line_inside = true;
        break;
      }
    }
    if (!line_inside) out.push_back(s.complement_points());
  }
  return out;
}

const char* veldkamp_line_type_name(VeldkampLineType t) {
  switch (t) {
    case VeldkampLineType::kPerpPerpPerpCollinear:
      return "perp-perp-perp-collinear";
    case VeldkampLineType::kPerpPerpPerpSkew:
      return "perp-perp-perp-noncollinear";
    case VeldkampLineType::kPerpHypHyp:
      return "perp-hyperbolic-hyperbolic";
    case VeldkampLineType::kPerpHypEll:
      return "perp-hyperbolic-elliptic";
    case VeldkampLineType::kPerpEllEll:
      return "perp-elliptic-elliptic";
  }
  return "?";
}

namespace {

VeldkampLineType line_type_of(const Hyperplane& a, const Hyperplane& b,
                              const Hyperplane& c) {
  int perp = 0, hyp = 0, ell = 0;
  uint32_t centers[3];
  int np = 0;
  for (const Hyperplane* h : {&a, &b, &c}) {
    switch (h->type) {
      case HyperplaneType::kPerp:
        centers[np++] = h->q;
        ++perp;
        break;
      case HyperplaneType::kHyperbolic:
        ++hyp;
        break;
      case HyperplaneType::kElliptic:
        ++ell;
        break;
    }
  }
  if (perp == 3) {
    return packed_form(centers[0], centers[1]) == 0
               ? VeldkampLineType::kPerpPerpPerpCollinear
               : VeldkampLineType::kPerpPerpPerpSkew;
  }
  if (perp == 1 && hyp == 2) return VeldkampLineType::kPerpHypHyp;
  if (perp == 1 && ell == 2) return VeldkampLineType::kPerpEllEll;
  if (perp == 1 && hyp == 1 && ell == 1) return VeldkampLineType::kPerpHypEll;
  throw std::logic_error("veldkamp line with an impossible tag multiset");
}

}  // namespace

VeldkampCensus veldkamp_lines(const PolarSpace& space) {
  std::vector<Hyperplane> hs = all_hyperplanes(space);
  // Dedupe (each hyperplane appears once across the two parametric families).
  {
    std::unordered_set<size_t> seen;
    std::vector<Hyperplane> uniq;
    for (auto& h : hs) {
      if (seen.insert(h.points.hash()).second) uniq.push_back(std::move(h));
    }
    hs = std::move(uniq);
  }
  std::unordered_map<size_t, uint32_t> index;
  for (uint32_t i = 0; i < hs.size(); ++i) index[hs[i].points.hash()] = i;

  VeldkampCensus census;
  census.hyperplanes = static_cast<uint32_t>(hs.size());
  std::unordered_set<uint64_t> seen_triples;
  for (uint32_t i = 0; i < hs.size(); ++i) {
    for (uint32_t j = i + 1; j < hs.size(); ++j) {
      PointSet third = (hs[i].points ^ hs[j].points).complement_points();
      auto it = index.find(third.hash());
      if (it == index.end() || !(hs[it->second].points == third)) {
        throw std::logic_error("Veldkamp sum left the hyperplane family");
      }
      uint32_t k = it->second;
      uint32_t t[3] = {i, j, k};
      std::sort(t, t + 3);
      uint64_t key = (uint64_t(t[0]) << 40) | (uint64_t(t[1]) << 20) | t[2];
      if (!seen_triples.insert(key).second) continue;
      ++census.counts[line_type_of(hs[t[0]], hs[t[1]], hs[t[2]])];
      ++census.total;
    }
  }
  return census;
}

VeldkampCensus veldkamp_lines_expected(int n_qubits) {
  // Hyperplanes correspond to (v, e) in F2^{2N+1} \ {0}: perps are (q, 0)
  // with q != 0, quadrics are (q, 1). Veldkamp lines are the projective
  // lines, so the census reduces to counting parameter pairs.
  const uint64_t nv = uint64_t{1} << (2 * n_qubits);
  uint64_t sym = 0, skew = 0;
  for (uint64_t q = 0; q < nv; ++q) {
    (packed_q0(static_cast<uint32_t>(q)) == 0 ? sym : skew) += 1;
  }
  uint64_t iso_pairs = 0;  // ordered pairs of distinct orthogonal points
  for (uint64_t p = 1; p < nv; ++p) {
    for (uint64_t q = 1; q < nv; ++q) {
      if (p != q && packed_form(p, q) == 0) ++iso_pairs;
    }
  }
  VeldkampCensus c;
  c.hyperplanes = static_cast<uint32_t>(2 * nv - 1);
  // Lines {C_p, C_q, C_{p+q}}: unordered pairs {p, q} of distinct points,
  // each line counted 3 times.
  c.counts[VeldkampLineType::kPerpPerpPerpCollinear] = iso_pairs / 2 / 3;
  c.counts[VeldkampLineType::kPerpPerpPerpSkew] =
      ((nv - 1) * (nv - 2) / 2 - iso_pairs / 2) / 3;
  // Lines {C_{q+q'}, H_q, H_{q'}}: unordered pairs of distinct quadric
  // parameters, counted once.
  c.counts[VeldkampLineType::kPerpHypHyp] = sym * (sym - 1) / 2;
  c.counts[VeldkampLineType::kPerpHypEll] = sym * skew;
  c.counts[VeldkampLineType::kPerpEllEll] = skew * (skew - 1) / 2;
  for (const auto& [_, n] : c.counts) c.total += n;
  return c;
}

}  // namespace paulipolar
