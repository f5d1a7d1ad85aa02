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

#include "paulipolar/polynomial.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace paulipolar {

namespace {

int total_degree(const Polynomial::Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

}  // namespace

void Polynomial::add_term(const Monomial& m, Scalar c) {
  if (m.size() != n_vars_) {
    throw std::invalid_argument("monomial arity does not match the polynomial");
  }
  if (c == Scalar{}) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Scalar{}) terms_.erase(it);
  }
}

Polynomial::Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar{} : it->second;
}

Polynomial::Scalar Polynomial::constant_term() const {
  return coefficient(Monomial(n_vars_, 0));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

int Polynomial::min_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int t = total_degree(m);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

int Polynomial::degree_in(size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

Polynomial Polynomial::derivative(size_t var) const {
  Polynomial out(n_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * static_cast<double>(m[var]));
  }
  return out;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial out(n_vars_);
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) == d) out.add_term(m, c);
  }
  return out;
}

Polynomial Polynomial::multiplied_by(const Monomial& m) const {
  if (m.size() != n_vars_) {
    throw std::invalid_argument("monomial arity does not match the polynomial");
  }
  Polynomial out(n_vars_);
  for (const auto& [t, c] : terms_) {
    Monomial p = t;
    for (size_t i = 0; i < n_vars_; ++i) p[i] += m[i];
    out.add_term(p, c);
  }
  return out;
}

Polynomial::Scalar Polynomial::evaluate(std::span<const Scalar> x) const {
  if (x.size() != n_vars_) {
    throw std::invalid_argument("evaluation point arity does not match");
  }
  Scalar out{};
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (size_t i = 0; i < n_vars_; ++i) {
      for (uint16_t e = 0; e < m[i]; ++e) v *= x[i];
    }
    out += v;
  }
  return out;
}

double Polynomial::max_abs_coefficient() const {
  double out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, std::abs(c));
  return out;
}

std::string Polynomial::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << ")";
    for (size_t i = 0; i < n_vars_; ++i) {
      if (m[i] == 0) continue;
      os << "*" << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace paulipolar
