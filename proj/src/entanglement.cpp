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

#include "paulipolar/entanglement.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace paulipolar {

namespace {

using Eigen::MatrixXcd;
using Scalar = std::complex<double>;

int numeric_rank(const MatrixXcd& m, double eps) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > eps * sv(0)) ++rank;
  }
  return rank;
}

}  // namespace

StateTensor StateTensor::zeros(std::vector<int> format) {
  if (format.empty()) throw std::invalid_argument("tensor needs at least one factor");
  size_t total = 1;
  for (int d : format) {
    if (d < 2) throw std::invalid_argument("factor dimensions must be at least 2");
    total *= static_cast<size_t>(d);
  }
  StateTensor t;
  t.format = std::move(format);
  t.amplitudes.assign(total, Scalar{});
  return t;
}

size_t StateTensor::flat_size() const {
  size_t total = 1;
  for (int d : format) total *= static_cast<size_t>(d);
  return total;
}

size_t StateTensor::flat_index(std::span<const int> idx) const {
  if (idx.size() != format.size()) {
    throw std::invalid_argument("index arity does not match the format");
  }
  size_t flat = 0;
  for (size_t f = 0; f < format.size(); ++f) {
    if (idx[f] < 0 || idx[f] >= format[f]) {
      throw std::out_of_range("tensor index out of range");
    }
    flat = flat * static_cast<size_t>(format[f]) + static_cast<size_t>(idx[f]);
  }
  return flat;
}

std::complex<double>& StateTensor::at(std::span<const int> idx) {
  return amplitudes[flat_index(idx)];
}
const std::complex<double>& StateTensor::at(std::span<const int> idx) const {
  return amplitudes[flat_index(idx)];
}

double StateTensor::norm() const {
  double s = 0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

bool StateTensor::is_zero() const {
  return std::all_of(amplitudes.begin(), amplitudes.end(),
                     [](const Scalar& a) { return a == Scalar{}; });
}

StateTensor apply_local_operators(
    const StateTensor& t, const std::vector<std::vector<std::complex<double>>>& ops) {
  if (ops.size() != t.format.size()) {
    throw std::invalid_argument("one operator per tensor factor is required");
  }
  StateTensor cur = t;
  for (size_t f = 0; f < ops.size(); ++f) {
    const int d = t.format[f];
    if (ops[f].size() != static_cast<size_t>(d) * d) {
      throw std::invalid_argument("operator size does not match its factor");
    }
    // Contract factor f: stride layout of row-major lexicographic order.
    size_t inner = 1;
    for (size_t g = f + 1; g < t.format.size(); ++g) inner *= t.format[g];
    size_t outer = cur.amplitudes.size() / (inner * d);
    StateTensor next = cur;
    for (size_t o = 0; o < outer; ++o) {
      for (size_t i = 0; i < inner; ++i) {
        for (int r = 0; r < d; ++r) {
          Scalar acc{};
          for (int c = 0; c < d; ++c) {
            acc += ops[f][r * d + c] * cur.amplitudes[(o * d + c) * inner + i];
          }
          next.amplitudes[(o * d + r) * inner + i] = acc;
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::complex<double>> random_det1_matrix(int d, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("matrix dimension must be positive");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  while (true) {
    MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        double re, im;
        do {
          re = unit(rng);
          im = unit(rng);
        } while (re * re + im * im > 1.0);
        g(r, c) = Scalar(re, im);
      }
    }
    const Scalar det = g.determinant();
    if (std::abs(det) < 1e-6) continue;
    g /= std::pow(det, 1.0 / d);
    std::vector<Scalar> out(static_cast<size_t>(d) * d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) out[r * d + c] = g(r, c);
    }
    return out;
  }
}

bool two_qubit_separable(const StateTensor& t, double eps) {
  if (t.format != std::vector<int>{2, 2}) {
    throw std::invalid_argument("separability test is for 2x2 tensors");
  }
  if (t.is_zero()) throw std::invalid_argument("zero tensor has no class");
  const auto& a = t.amplitudes;
  const Scalar det = a[0] * a[3] - a[1] * a[2];
  const double n = t.norm();
  return std::abs(det) <= eps * n * n;
}

std::array<int, 3> flattening_ranks(const StateTensor& t, double eps) {
  if (t.format != std::vector<int>{2, 2, 2}) {
    throw std::invalid_argument("flattening ranks are for 2x2x2 tensors");
  }
  if (t.is_zero()) throw std::invalid_argument("zero tensor has no class");
  const auto& a = t.amplitudes;  // a[4i + 2j + k]
  std::array<int, 3> ranks{};
  for (int axis = 0; axis < 3; ++axis) {
    MatrixXcd m(2, 4);
    int col = 0;
    for (int u = 0; u < 2; ++u) {
      for (int v = 0; v < 2; ++v) {
        for (int w = 0; w < 2; ++w) {
          int ijk[3];
          ijk[axis] = w;
          int pos = 0;
          for (int f = 0; f < 3; ++f) {
            if (f != axis) ijk[f] = (pos++ == 0) ? u : v;
          }
          m(w, col) = a[4 * ijk[0] + 2 * ijk[1] + ijk[2]];
        }
        ++col;
      }
    }
    ranks[axis] = numeric_rank(m, eps);
  }
  return ranks;
}

std::complex<double> cayley_hyperdet(const StateTensor& t) {
  if (t.format != std::vector<int>{2, 2, 2}) {
    throw std::invalid_argument("the Cayley hyperdeterminant is for 2x2x2 tensors");
  }
  const auto& v = t.amplitudes;
  auto a = [&](int i, int j, int k) { return v[4 * i + 2 * j + k]; };
  const Scalar s000 = a(0, 0, 0), s001 = a(0, 0, 1), s010 = a(0, 1, 0),
               s011 = a(0, 1, 1), s100 = a(1, 0, 0), s101 = a(1, 0, 1),
               s110 = a(1, 1, 0), s111 = a(1, 1, 1);
  return s000 * s000 * s111 * s111 + s001 * s001 * s110 * s110 +
         s010 * s010 * s101 * s101 + s011 * s011 * s100 * s100 -
         2.0 * (s000 * s001 * s110 * s111 + s000 * s010 * s101 * s111 +
                s000 * s011 * s100 * s111 + s001 * s010 * s101 * s110 +
                s001 * s011 * s100 * s110 + s010 * s011 * s100 * s101) +
         4.0 * (s000 * s011 * s101 * s110 + s001 * s010 * s100 * s111);
}

const char* slocc_class_name(SloccClass3Qubit c) {
  switch (c) {
    case SloccClass3Qubit::kZero:
      return "ZERO";
    case SloccClass3Qubit::kSep:
      return "SEP";
    case SloccClass3Qubit::kB1:
      return "B1";
    case SloccClass3Qubit::kB2:
      return "B2";
    case SloccClass3Qubit::kB3:
      return "B3";
    case SloccClass3Qubit::kW:
      return "W";
    case SloccClass3Qubit::kGhz:
      return "GHZ";
  }
  return "?";
}

SloccClassification classify_3qubit(const StateTensor& t, double eps) {
  if (t.format != std::vector<int>{2, 2, 2}) {
    throw std::invalid_argument("the 3-qubit classifier is for 2x2x2 tensors");
  }
  SloccClassification out;
  out.norm = t.norm();
  if (t.is_zero()) {
    out.slocc_class = SloccClass3Qubit::kZero;
    return out;
  }
  const Scalar delta = cayley_hyperdet(t);
  out.hyperdet_abs = std::abs(delta);
  const double n4 = std::pow(out.norm, 4);
  out.hyperdet_abs_normalized = out.hyperdet_abs / n4;
  if (out.hyperdet_abs > eps * n4) {
    out.slocc_class = SloccClass3Qubit::kGhz;
    out.ranks = flattening_ranks(t, eps);
    return out;
  }
  out.ranks = flattening_ranks(t, eps);
  const auto& r = out.ranks;
  if (r == std::array<int, 3>{1, 1, 1}) {
    out.slocc_class = SloccClass3Qubit::kSep;
  } else if (r == std::array<int, 3>{1, 2, 2}) {
    out.slocc_class = SloccClass3Qubit::kB1;
  } else if (r == std::array<int, 3>{2, 1, 2}) {
    out.slocc_class = SloccClass3Qubit::kB2;
  } else if (r == std::array<int, 3>{2, 2, 1}) {
    out.slocc_class = SloccClass3Qubit::kB3;
  } else if (r == std::array<int, 3>{2, 2, 2}) {
    out.slocc_class = SloccClass3Qubit::kW;
  } else {
    throw std::runtime_error("flattening ranks outside the 3-qubit stratification");
  }
  return out;
}

namespace {

// One rank-one point plus its affine tangent rows.
void append_tangent_rows(std::span<const int> format, bool symmetric,
                         std::mt19937_64& rng, std::vector<std::vector<Scalar>>& rows) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const size_t nf = format.size();
  size_t total = 1;
  for (int d : format) total *= static_cast<size_t>(d);

  std::vector<std::vector<Scalar>> factors;
  const size_t distinct = symmetric ? 1 : nf;
  for (size_t f = 0; f < distinct; ++f) {
    std::vector<Scalar> x(format[symmetric ? 0 : f]);
    for (auto& v : x) v = Scalar(gauss(rng), gauss(rng));
    factors.push_back(std::move(x));
  }
  auto factor_of = [&](size_t f) -> const std::vector<Scalar>& {
    return factors[symmetric ? 0 : f];
  };

  for (size_t f = 0; f < nf; ++f) {
    if (symmetric && f > 0) break;  // d/dx of x^{on} covers all slots at once
    for (int j = 0; j < format[f]; ++j) {
      std::vector<Scalar> row(total, Scalar{});
      for (size_t flat = 0; flat < total; ++flat) {
        // Decode the lexicographic multi-index.
        size_t rem = flat;
        std::array<int, 16> idx{};
        for (size_t g = nf; g-- > 0;) {
          idx[g] = static_cast<int>(rem % format[g]);
          rem /= format[g];
        }
        Scalar v{};
        if (symmetric) {
          // Leibniz over every slot carrying e_j.
          for (size_t slot = 0; slot < nf; ++slot) {
            if (idx[slot] != j) continue;
            Scalar p = 1.0;
            for (size_t g = 0; g < nf; ++g) {
              if (g != slot) p *= factor_of(g)[idx[g]];
            }
            v += p;
          }
        } else {
          if (idx[f] != j) continue;
          Scalar p = 1.0;
          for (size_t g = 0; g < nf; ++g) {
            if (g != f) p *= factor_of(g)[idx[g]];
          }
          v = p;
        }
        row[flat] = v;
      }
      rows.push_back(std::move(row));
    }
  }
}

int secant_rank_once(std::span<const int> format, int k, bool symmetric, double eps,
                     std::mt19937_64& rng) {
  std::vector<std::vector<Scalar>> rows;
  for (int point = 0; point < k; ++point) {
    append_tangent_rows(format, symmetric, rng, rows);
  }
  MatrixXcd m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return numeric_rank(m, eps);
}

}  // namespace

int secant_dimension_estimate(std::span<const int> format, int k) {
  return secant_dimension_estimate(format, k, SecantOptions());
}

int secant_dimension_estimate(std::span<const int> format, int k,
                              const SecantOptions& options) {
  if (format.empty() || k < 1) {
    throw std::invalid_argument("need a format and k >= 1");
  }
  size_t tangent_span = 1;
  for (int d : format) {
    if (d < 2) throw std::invalid_argument("factor dimensions must be at least 2");
    tangent_span += static_cast<size_t>(d) - 1;
  }
  if (options.symmetric) {
    for (int d : format) {
      if (d != format[0]) {
        throw std::invalid_argument("the symmetric variant needs equal factors");
      }
    }
  }
  if (static_cast<size_t>(k) * tangent_span >= 10000) {
    throw std::invalid_argument("secant estimate out of the supported scale");
  }
  std::mt19937_64 rng(options.seed);
  int rank = -1;
  const int repeats = std::max(1, options.repeats);
  for (int it = 0; it < repeats; ++it) {
    const int r = secant_rank_once(format, k, options.symmetric, options.eps, rng);
    if (rank < 0) {
      rank = r;
    } else if (rank != r) {
      throw std::runtime_error("secant dimension estimate varied across repeats");
    }
  }
  return rank;
}

ZakReport zak_dichotomy(std::span<const int> format) {
  return zak_dichotomy(format, SecantOptions());
}

ZakReport zak_dichotomy(std::span<const int> format, const SecantOptions& options) {
  ZakReport report;
  if (options.symmetric) {
    report.x_dimension = format[0] - 1;
    // dim Sym^n(C^d) = C(n + d - 1, n)
    const int n = static_cast<int>(format.size()), d = format[0];
    long long amb = 1;
    for (int i = 1; i <= n; ++i) amb = amb * (d - 1 + i) / i;
    report.ambient_projective = static_cast<int>(amb - 1);
  } else {
    int dim = 0;
    long long amb = 1;
    for (int d : format) {
      dim += d - 1;
      amb *= d;
    }
    report.x_dimension = dim;
    report.ambient_projective = static_cast<int>(amb - 1);
  }
  report.expected_projective = 2 * report.x_dimension + 1;
  report.actual_projective = secant_dimension_estimate(format, 2, options) - 1;
  report.tau_equals_sigma2 = report.actual_projective < report.expected_projective;
  return report;
}

Polynomial hyperplane_section_poly(const StateTensor& t) {
  size_t n_vars = 0;
  for (int d : t.format) n_vars += static_cast<size_t>(d);
  Polynomial f(n_vars);
  const size_t total = t.flat_size();
  for (size_t flat = 0; flat < total; ++flat) {
    if (t.amplitudes[flat] == Scalar{}) continue;
    Polynomial::Monomial m(n_vars, 0);
    size_t rem = flat, offset = n_vars;
    for (size_t g = t.format.size(); g-- > 0;) {
      offset -= static_cast<size_t>(t.format[g]);
      m[offset + rem % t.format[g]] += 1;
      rem /= t.format[g];
    }
    f.add_term(m, t.amplitudes[flat]);
  }
  return f;
}

LocalGerm chart_localize(const StateTensor& t, std::span<const int> chart) {
  if (chart.size() != t.format.size()) {
    throw std::invalid_argument("one chart coordinate per factor is required");
  }
  for (size_t f = 0; f < chart.size(); ++f) {
    if (chart[f] < 0 || chart[f] >= t.format[f]) {
      throw std::out_of_range("chart index out of range");
    }
  }
  size_t n_vars = 0;
  for (int d : t.format) n_vars += static_cast<size_t>(d) - 1;

  LocalGerm germ{Polynomial(n_vars), {}};
  static const char* kShortNames[4] = {"x", "y", "z", "t"};
  for (size_t i = 0; i < n_vars; ++i) {
    germ.variables.push_back(n_vars <= 4 ? kShortNames[i]
                                         : "x" + std::to_string(i + 1));
  }

  const size_t total = t.flat_size();
  for (size_t flat = 0; flat < total; ++flat) {
    if (t.amplitudes[flat] == Scalar{}) continue;
    Polynomial::Monomial m(n_vars, 0);
    size_t rem = flat;
    std::array<int, 16> idx{};
    for (size_t g = t.format.size(); g-- > 0;) {
      idx[g] = static_cast<int>(rem % t.format[g]);
      rem /= t.format[g];
    }
    size_t offset = 0;
    for (size_t g = 0; g < t.format.size(); ++g) {
      if (idx[g] != chart[g]) {
        // Position of coordinate idx[g] among the factor's free coordinates.
        const int pos = idx[g] - (idx[g] > chart[g] ? 1 : 0);
        m[offset + static_cast<size_t>(pos)] += 1;
      }
      offset += static_cast<size_t>(t.format[g]) - 1;
    }
    germ.poly.add_term(m, t.amplitudes[flat]);
  }
  return germ;
}

namespace {

std::vector<Polynomial::Monomial> monomials_up_to(size_t n_vars, int max_degree) {
  std::vector<Polynomial::Monomial> out;
  Polynomial::Monomial cur(n_vars, 0);
  auto rec = [&](auto&& self, size_t var, int remaining) -> void {
    if (var + 1 == n_vars) {
      for (int e = 0; e <= remaining; ++e) {
        cur[var] = static_cast<uint16_t>(e);
        out.push_back(cur);
      }
      cur[var] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = static_cast<uint16_t>(e);
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  if (n_vars == 0) {
    out.push_back({});
  } else {
    rec(rec, 0, max_degree);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    return std::tie(da, a) < std::tie(db, b);
  });
  return out;
}

// Rank data of the truncated Jacobian ideal at degree cut D.
struct TruncatedIdeal {
  int rank = 0;
  int monomial_count = 0;
  bool top_layer_inside = false;
};

TruncatedIdeal truncated_ideal_rank(const std::vector<Polynomial>& gens, size_t n_vars,
                                    int cut, double eps) {
  const auto mons = monomials_up_to(n_vars, cut);
  std::map<Polynomial::Monomial, int> col;
  for (size_t i = 0; i < mons.size(); ++i) col[mons[i]] = static_cast<int>(i);

  std::vector<Eigen::VectorXcd> rows;
  for (const Polynomial& g : gens) {
    const int gmin = g.min_degree();
    for (const auto& m : mons) {
      const int md = std::accumulate(m.begin(), m.end(), 0);
      if (md + gmin > cut) continue;
      Eigen::VectorXcd row = Eigen::VectorXcd::Zero(static_cast<int>(mons.size()));
      bool any = false;
      for (const auto& [e, c] : g.terms()) {
        Polynomial::Monomial p = e;
        int pd = md;
        for (size_t v = 0; v < n_vars; ++v) {
          p[v] += m[v];
          pd += e[v];
        }
        int total = std::accumulate(p.begin(), p.end(), 0);
        if (total <= cut) {
          row(col.at(p)) = c;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }

  TruncatedIdeal out;
  out.monomial_count = static_cast<int>(mons.size());
  if (rows.empty()) {
    out.rank = 0;
    out.top_layer_inside = false;
    return out;
  }
  MatrixXcd a(rows.size(), mons.size());
  for (size_t r = 0; r < rows.size(); ++r) a.row(r) = rows[r];
  out.rank = numeric_rank(a, eps);

  std::vector<int> top_cols;
  for (size_t i = 0; i < mons.size(); ++i) {
    if (std::accumulate(mons[i].begin(), mons[i].end(), 0) == cut) {
      top_cols.push_back(static_cast<int>(i));
    }
  }
  MatrixXcd aug(rows.size() + top_cols.size(), mons.size());
  aug.topRows(rows.size()) = a;
  aug.bottomRows(top_cols.size()).setZero();
  for (size_t i = 0; i < top_cols.size(); ++i) {
    aug(rows.size() + i, top_cols[i]) = 1.0;
  }
  out.top_layer_inside = (numeric_rank(aug, eps) == out.rank);
  return out;
}

}  // namespace

SingularityAnalysis singular_point_analysis(const LocalGerm& germ) {
  return singular_point_analysis(germ, SingularOptions());
}

SingularityAnalysis singular_point_analysis(const LocalGerm& germ,
                                            const SingularOptions& options) {
  const Polynomial& f = germ.poly;
  const size_t n = f.n_vars();
  const double scale = std::max(1e-300, f.max_abs_coefficient());

  if (std::abs(f.constant_term()) > options.eps * scale) {
    throw std::invalid_argument("the germ does not vanish at the basepoint");
  }
  std::vector<Polynomial> gens;
  for (size_t v = 0; v < n; ++v) {
    Polynomial d = f.derivative(v);
    if (std::abs(d.constant_term()) > options.eps * scale) {
      throw std::invalid_argument("the basepoint is not a critical point");
    }
    if (!d.is_zero()) gens.push_back(std::move(d));
  }

  SingularityAnalysis out;
  out.is_singular = true;

  // Hessian from the quadratic part.
  MatrixXcd hess = MatrixXcd::Zero(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Polynomial::Monomial m(n, 0);
      m[i] += 1;
      m[j] += 1;
      const Scalar c = f.coefficient(m);
      hess(i, j) = (i == j) ? 2.0 * c : c;
    }
  }
  out.hessian_corank = static_cast<int>(n) - numeric_rank(hess, options.eps);

  if (gens.empty()) {
    // The zero gradient ideal: nothing is isolated.
    out.isolated = false;
    out.truncation_used = options.max_truncation;
    return out;
  }

  int previous = -1;
  bool previous_certified = false;
  for (int cut = 2; cut <= options.max_truncation; ++cut) {
    TruncatedIdeal below = truncated_ideal_rank(gens, n, cut - 1, options.eps);
    TruncatedIdeal here = truncated_ideal_rank(gens, n, cut, options.eps);
    const int mu = below.monomial_count - below.rank;
    if (here.top_layer_inside) {
      if (previous_certified && previous == mu) {
        out.isolated = true;
        out.milnor_number = mu;
        out.truncation_used = cut;
        return out;
      }
      previous = mu;
      previous_certified = true;
    } else {
      previous_certified = false;
    }
  }
  out.isolated = false;
  out.truncation_used = options.max_truncation;
  return out;
}

const char* singularity_type_name(SingularityType t) {
  switch (t) {
    case SingularityType::kA1:
      return "A1";
    case SingularityType::kA2:
      return "A2";
    case SingularityType::kA3:
      return "A3";
    case SingularityType::kD4:
      return "D4";
    case SingularityType::kOther:
      return "OTHER";
  }
  return "?";
}

SingularityType singularity_type(const LocalGerm& germ,
                                 const SingularityAnalysis& analysis) {
  return singularity_type(germ, analysis, kDefaultEps);
}

SingularityType singularity_type(const LocalGerm& germ,
                                 const SingularityAnalysis& analysis, double eps) {
  if (!analysis.isolated) {
    throw std::invalid_argument("singularity type needs an isolated singularity");
  }
  const int mu = analysis.milnor_number;
  if (analysis.hessian_corank <= 1 && mu >= 1 && mu <= 3) {
    switch (mu) {
      case 1:
        return SingularityType::kA1;
      case 2:
        return SingularityType::kA2;
      default:
        return SingularityType::kA3;
    }
  }
  if (analysis.hessian_corank == 2 && mu == 4) {
    // Restrict the cubic part to the Hessian kernel plane and test for three
    // distinct roots of the binary cubic.
    const Polynomial& f = germ.poly;
    const size_t n = f.n_vars();
    MatrixXcd hess = MatrixXcd::Zero(n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        Polynomial::Monomial m(n, 0);
        m[i] += 1;
        m[j] += 1;
        const Scalar c = f.coefficient(m);
        hess(i, j) = (i == j) ? 2.0 * c : c;
      }
    }
    Eigen::JacobiSVD<MatrixXcd> svd(hess, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double s0 = sv.size() > 0 ? sv(0) : 0.0;
    std::vector<Eigen::VectorXcd> kernel;
    for (int i = 0; i < sv.size(); ++i) {
      if (s0 == 0.0 || sv(i) <= eps * s0) kernel.push_back(svd.matrixV().col(i));
    }
    if (kernel.size() != 2) return SingularityType::kOther;

    const Polynomial cubic = f.homogeneous_part(3);
    auto eval = [&](Scalar s, Scalar t) {
      std::vector<Scalar> x(n);
      for (size_t v = 0; v < n; ++v) x[v] = s * kernel[0](v) + t * kernel[1](v);
      return cubic.evaluate(x);
    };
    const Scalar c0 = eval(1, 0);
    const Scalar c3 = eval(0, 1);
    const Scalar p = eval(1, 1);   // c0 + c1 + c2 + c3
    const Scalar q = eval(1, -1);  // c0 - c1 + c2 - c3
    const Scalar c1 = (p - q) / 2.0 - c3;
    const Scalar c2 = (p + q) / 2.0 - c0;
    const Scalar disc = 18.0 * c0 * c1 * c2 * c3 - 4.0 * c1 * c1 * c1 * c3 +
                        c1 * c1 * c2 * c2 - 4.0 * c0 * c2 * c2 * c2 -
                        27.0 * c0 * c0 * c3 * c3;
    double coeff_scale =
        std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
    if (coeff_scale == 0.0) return SingularityType::kOther;
    const double rel = std::abs(disc) / std::pow(coeff_scale, 4);
    return rel > eps ? SingularityType::kD4 : SingularityType::kOther;
  }
  return SingularityType::kOther;
}

}  // namespace paulipolar
