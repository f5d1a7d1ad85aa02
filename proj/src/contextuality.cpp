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

#include "paulipolar/contextuality.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "paulipolar/dense_matrix.hpp"

namespace paulipolar {

namespace {

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PAULI_POLAR_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int context_sign(std::span<const PauliOperator> ops) {
  if (ops.size() < 2) {
    throw std::invalid_argument("a context needs at least two operators");
  }
  uint32_t acc = 0;
  for (size_t i = 0; i < ops.size(); ++i) {
    for (size_t j = i + 1; j < ops.size(); ++j) {
      if (symplectic_form(ops[i].vector(), ops[j].vector()) != 0) {
        throw std::invalid_argument("context operators must pairwise commute");
      }
    }
    acc ^= ops[i].vector().bits();
  }
  if (acc != 0) {
    throw std::invalid_argument("context vectors must cancel to the identity");
  }
  PauliOperator product = ops[0];
  for (size_t i = 1; i < ops.size(); ++i) product = product * ops[i];
  const int lambda = product.phase().exponent();
  if (lambda == 1 || lambda == 3) {
    throw std::logic_error("context product came out +-iI; inputs were not Hermitian");
  }
  return lambda == 0 ? +1 : -1;
}

void Configuration::validate() const {
  if (points.empty()) throw std::invalid_argument("configuration has no points");
  const uint32_t width = points[0].width();
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].width() != width) {
      throw std::invalid_argument("configuration mixes operator widths");
    }
    if (points[i].vector().is_zero()) {
      throw std::invalid_argument("configuration points must be non-identity");
    }
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].vector() == points[j].vector()) {
        throw std::invalid_argument("configuration points must be projectively distinct");
      }
    }
  }
  std::vector<std::vector<uint32_t>> seen;
  for (const ContextRef& ctx : contexts) {
    if (ctx.point_ids.size() < 2 || ctx.point_ids.size() > 4) {
      throw std::invalid_argument("contexts hold 2 to 4 operators");
    }
    std::vector<uint32_t> sorted = ctx.point_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("context repeats a point");
    }
    if (sorted.back() >= points.size()) {
      throw std::invalid_argument("context references a missing point");
    }
    if (std::find(seen.begin(), seen.end(), sorted) != seen.end()) {
      throw std::invalid_argument("duplicate context");
    }
    seen.push_back(sorted);
    std::vector<PauliOperator> ops;
    for (uint32_t id : ctx.point_ids) ops.push_back(points[id]);
    if (context_sign(ops) != ctx.sign) {
      throw std::invalid_argument("recorded context sign is wrong");
    }
  }
}

bool Configuration::verify_signs_with_matrix_oracle() const {
  for (const ContextRef& ctx : contexts) {
    ComplexMatrix product = to_matrix(points[ctx.point_ids[0]]);
    for (size_t i = 1; i < ctx.point_ids.size(); ++i) {
      product = product * to_matrix(points[ctx.point_ids[i]]);
    }
    ComplexMatrix expected = ComplexMatrix::identity(product.rows())
                                 .scaled(static_cast<double>(ctx.sign));
    if (!(product == expected)) return false;
  }
  return true;
}

bool is_magic(const Configuration& config) {
  if (config.points.size() > 63) {
    throw std::invalid_argument("magic test supports at most 63 points");
  }
  // Row per context: incidence bits plus the sign bit (1 for -1) at bit 63.
  std::vector<uint64_t> rows;
  for (const auto& ctx : config.contexts) {
    uint64_t row = 0;
    for (uint32_t id : ctx.point_ids) row |= uint64_t{1} << id;
    if (ctx.sign < 0) row |= uint64_t{1} << 63;
    rows.push_back(row);
  }
  size_t rank = 0;
  for (uint32_t col = 0; col < config.points.size() && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && !((rows[sel] >> col) & 1)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r) {
    if (rows[r] != 0) return true;  // 0 = 1: no classical assignment
  }
  return false;
}

namespace {

Configuration config_from_strings(const std::vector<std::string>& point_strs,
                                  const std::vector<std::vector<uint32_t>>& contexts) {
  Configuration config;
  for (const auto& s : point_strs) config.points.push_back(parse_pauli(s));
  for (const auto& ids : contexts) {
    std::vector<PauliOperator> ops;
    for (uint32_t id : ids) ops.push_back(config.points[id]);
    config.contexts.push_back({ids, context_sign(ops)});
  }
  return config;
}

}  // namespace

Configuration mermin_square_canonical() {
  return config_from_strings(
      {"IZ", "ZI", "ZZ", "XI", "IX", "XX", "XZ", "ZX", "YY"},
      {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
}

Configuration mermin_pentagram_canonical() {
  return config_from_strings(
      {"XXX", "XZZ", "ZXZ", "ZZX", "XII", "IXI", "IIX", "ZII", "IZI", "IIZ"},
      {{0, 1, 2, 3}, {0, 4, 5, 6}, {1, 4, 8, 9}, {2, 7, 5, 9}, {3, 7, 8, 6}});
}

std::vector<Configuration> enumerate_grids(const PolarSpace& w32) {
  if (w32.n_qubits() != 2) {
    throw std::invalid_argument("grid enumeration runs on W(3,2)");
  }
  std::vector<Configuration> grids;
  for (uint32_t q = 0; q < w32.vector_count(); ++q) {
    if (packed_q0(q) != 0) continue;
    Hyperplane h = quadric(w32, q);
    std::vector<uint32_t> pts = h.points.values();
    Configuration config;
    std::unordered_map<uint32_t, uint32_t> id;
    for (uint32_t v : pts) {
      id[v] = static_cast<uint32_t>(config.points.size());
      config.points.push_back(packed_to_operator(v, 2));
    }
    for (const auto& [a, b, c] : w32.lines()) {
      if (!(h.points.test(a) && h.points.test(b) && h.points.test(c))) continue;
      std::vector<uint32_t> ids = {id[a], id[b], id[c]};
      std::vector<PauliOperator> ops = {config.points[ids[0]], config.points[ids[1]],
                                        config.points[ids[2]]};
      config.contexts.push_back({ids, context_sign(ops)});
    }
    grids.push_back(std::move(config));
  }
  return grids;
}

namespace {

// A candidate context: four points of an isotropic plane whose vectors
// cancel (plane minus one of its lines), as a 64-bit mask over the packed
// point values of W(5,2).
struct SearchContext {
  uint64_t mask;
  std::array<uint32_t, 4> pts;
  int sign;
};

std::vector<SearchContext> pentagram_contexts(const PolarSpace& w52) {
  if (w52.n_qubits() != 3) {
    throw std::invalid_argument("pentagram enumeration runs on W(5,2)");
  }
  if (!w52.planes_materialized()) {
    throw std::invalid_argument("pentagram enumeration needs the plane census");
  }
  std::vector<SearchContext> out;
  out.reserve(w52.planes().size() * 7);
  for (const auto& plane : w52.planes()) {
    // Affine 4-sets with zero sum = complements of the plane's 7 lines.
    for (size_t i = 0; i < 7; ++i) {
      for (size_t j = i + 1; j < 7; ++j) {
        const uint32_t a = plane[i], b = plane[j], c = a ^ b;
        if (c < b) continue;  // one orientation per line
        SearchContext ctx;
        ctx.mask = 0;
        size_t k = 0;
        for (uint32_t v : plane) {
          if (v != a && v != b && v != c) {
            ctx.pts[k++] = v;
            ctx.mask |= uint64_t{1} << v;
          }
        }
        std::array<PauliOperator, 4> ops = {
            packed_to_operator(ctx.pts[0], 3), packed_to_operator(ctx.pts[1], 3),
            packed_to_operator(ctx.pts[2], 3), packed_to_operator(ctx.pts[3], 3)};
        ctx.sign = context_sign(std::span<const PauliOperator>(ops));
        out.push_back(ctx);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SearchContext& a, const SearchContext& b) { return a.mask < b.mask; });
  return out;
}

// Fixed-size bit rows for the compatibility graph.
class BitRow {
 public:
  explicit BitRow(size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void intersect_into(const BitRow& o, BitRow& dst) const {
    for (size_t w = 0; w < words_.size(); ++w) dst.words_[w] = words_[w] & o.words_[w];
  }
  template <typename F>
  void for_each_above(size_t floor, F&& fn) const {
    const size_t start = floor + 1;
    size_t w = start >> 6;
    if (w >= words_.size()) return;
    uint64_t cur = words_[w] & ~((uint64_t{1} << (start & 63)) - 1);
    while (true) {
      while (cur) {
        fn(64 * w + static_cast<size_t>(std::countr_zero(cur)));
        cur &= cur - 1;
      }
      if (++w >= words_.size()) break;
      cur = words_[w];
    }
  }

 private:
  std::vector<uint64_t> words_;
};

struct FoundPentagram {
  std::array<uint32_t, 5> ctx_ids;
};

}  // namespace

PentagramCensus enumerate_pentagrams(const PolarSpace& w52,
                                     const PentagramOptions& options) {
  std::vector<SearchContext> ctxs = pentagram_contexts(w52);
  if (options.within) {
    uint64_t allowed = 0;
    for (uint32_t v : options.within->values()) allowed |= uint64_t{1} << v;
    std::erase_if(ctxs, [&](const SearchContext& c) { return (c.mask & ~allowed) != 0; });
  }
  const size_t n = ctxs.size();

  // Compatibility: two contexts overlap in exactly one point.
  std::vector<BitRow> adj(n, BitRow(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (std::popcount(ctxs[i].mask & ctxs[j].mask) == 1) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }

  const int threads = std::max(1, std::min(resolve_thread_count(options.threads),
                                           static_cast<int>(std::max<size_t>(n, 1))));
  std::vector<std::vector<FoundPentagram>> found(threads);

  auto worker = [&](int t) {
    BitRow c2(n), c3(n), c4(n);
    for (size_t i0 = t; i0 < n; i0 += static_cast<size_t>(threads)) {
      adj[i0].for_each_above(i0, [&](size_t i1) {
        adj[i0].intersect_into(adj[i1], c2);
        c2.for_each_above(i1, [&](size_t i2) {
          c2.intersect_into(adj[i2], c3);
          c3.for_each_above(i2, [&](size_t i3) {
            c3.intersect_into(adj[i3], c4);
            c4.for_each_above(i3, [&](size_t i4) {
              const uint64_t all = ctxs[i0].mask | ctxs[i1].mask | ctxs[i2].mask |
                                   ctxs[i3].mask | ctxs[i4].mask;
              if (std::popcount(all) == 10) {
                found[t].push_back({{static_cast<uint32_t>(i0), static_cast<uint32_t>(i1),
                                     static_cast<uint32_t>(i2), static_cast<uint32_t>(i3),
                                     static_cast<uint32_t>(i4)}});
              }
            });
          });
        });
      });
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::vector<FoundPentagram> all;
  for (auto& part : found) {
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), [](const FoundPentagram& a, const FoundPentagram& b) {
    return a.ctx_ids < b.ctx_ids;
  });

  PentagramCensus census;
  census.count = all.size();
  for (const FoundPentagram& pg : all) {
    uint64_t union_mask = 0;
    for (uint32_t ci : pg.ctx_ids) union_mask |= ctxs[ci].mask;
    Configuration config;
    std::unordered_map<uint32_t, uint32_t> id;
    for (uint32_t v = 1; v < 64; ++v) {
      if ((union_mask >> v) & 1) {
        id[v] = static_cast<uint32_t>(config.points.size());
        config.points.push_back(packed_to_operator(v, 3));
      }
    }
    for (uint32_t ci : pg.ctx_ids) {
      Configuration::ContextRef ref;
      for (uint32_t v : ctxs[ci].pts) ref.point_ids.push_back(id[v]);
      std::sort(ref.point_ids.begin(), ref.point_ids.end());
      ref.sign = ctxs[ci].sign;
      config.contexts.push_back(std::move(ref));
    }
    census.all_magic = census.all_magic && is_magic(config);
    if (options.collect) census.configurations.push_back(std::move(config));
  }
  return census;
}

uint64_t pentagrams_within(const PolarSpace& w52, const PointSet& pts, int threads) {
  PentagramOptions options;
  options.within = pts;
  options.threads = threads;
  return enumerate_pentagrams(w52, options).count;
}

std::string GameValue::str() const {
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

GameValue classical_game_value(const Configuration& square) {
  if (square.points.size() != 9 || square.contexts.size() != 6) {
    throw std::invalid_argument("game value needs a 3x3 square configuration");
  }
  for (const auto& ctx : square.contexts) {
    if (ctx.point_ids.size() != 3) {
      throw std::invalid_argument("square contexts have three points");
    }
  }
  auto disjoint = [&](const Configuration::ContextRef& a,
                      const Configuration::ContextRef& b) {
    for (uint32_t x : a.point_ids) {
      for (uint32_t y : b.point_ids) {
        if (x == y) return false;
      }
    }
    return true;
  };
  // Rows = the group of contexts disjoint from context 0 (plus itself).
  std::vector<int> rows = {0}, cols;
  for (int c = 1; c < 6; ++c) {
    (disjoint(square.contexts[0], square.contexts[c]) ? rows : cols).push_back(c);
  }
  if (rows.size() != 3 || cols.size() != 3) {
    throw std::invalid_argument("contexts do not split into rows and columns");
  }
  // Each row meets each column in exactly one point.
  int crossing[3][3];       // point id at (row, col)
  int row_slot[3][3];       // its position inside the row context
  int col_slot[3][3];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const auto& rc = square.contexts[rows[r]];
      const auto& cc = square.contexts[cols[c]];
      int hits = 0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (rc.point_ids[i] == cc.point_ids[j]) {
            crossing[r][c] = rc.point_ids[i];
            row_slot[r][c] = i;
            col_slot[r][c] = j;
            ++hits;
          }
        }
      }
      if (hits != 1) {
        throw std::invalid_argument("contexts do not form a 3x3 grid");
      }
    }
  }
  (void)crossing;

  // Allowed answers per context: +-1 triples whose product equals the sign.
  auto allowed = [](int sign) {
    std::vector<std::array<int, 3>> out;
    for (int m = 0; m < 8; ++m) {
      std::array<int, 3> t = {1 - 2 * (m & 1), 1 - 2 * ((m >> 1) & 1),
                              1 - 2 * ((m >> 2) & 1)};
      if (t[0] * t[1] * t[2] == sign) out.push_back(t);
    }
    return out;
  };
  std::vector<std::array<int, 3>> row_answers[3], col_answers[3];
  for (int r = 0; r < 3; ++r) row_answers[r] = allowed(square.contexts[rows[r]].sign);
  for (int c = 0; c < 3; ++c) col_answers[c] = allowed(square.contexts[cols[c]].sign);

  int best = 0;
  for (int a0 = 0; a0 < 4; ++a0) {
    for (int a1 = 0; a1 < 4; ++a1) {
      for (int a2 = 0; a2 < 4; ++a2) {
        const std::array<int, 3>* alice[3] = {&row_answers[0][a0], &row_answers[1][a1],
                                              &row_answers[2][a2]};
        for (int b0 = 0; b0 < 4; ++b0) {
          for (int b1 = 0; b1 < 4; ++b1) {
            for (int b2 = 0; b2 < 4; ++b2) {
              const std::array<int, 3>* bob[3] = {&col_answers[0][b0], &col_answers[1][b1],
                                                  &col_answers[2][b2]};
              int wins = 0;
              for (int r = 0; r < 3; ++r) {
                for (int c = 0; c < 3; ++c) {
                  wins += ((*alice[r])[row_slot[r][c]] == (*bob[c])[col_slot[r][c]]) ? 1 : 0;
                }
              }
              best = std::max(best, wins);
            }
          }
        }
      }
    }
  }
  GameValue v;
  v.best_wins = best;
  v.queries = 9;
  const int64_t g = std::gcd(static_cast<int64_t>(best), int64_t{9});
  v.numerator = best / g;
  v.denominator = 9 / g;
  return v;
}

}  // namespace paulipolar
