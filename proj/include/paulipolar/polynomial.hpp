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

#ifndef PAULIPOLAR_POLYNOMIAL_HPP
#define PAULIPOLAR_POLYNOMIAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace paulipolar {

// Sparse multivariate polynomial with complex coefficients. Monomials are
// exponent vectors of fixed length n_vars.
class Polynomial {
 public:
  using Monomial = std::vector<uint16_t>;
  using Scalar = std::complex<double>;

  explicit Polynomial(size_t n_vars) : n_vars_(n_vars) {}

  size_t n_vars() const { return n_vars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, Scalar c);
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  int degree() const;      // -1 for the zero polynomial
  int min_degree() const;  // -1 for the zero polynomial
  int degree_in(size_t var) const;

  Polynomial derivative(size_t var) const;
  // Terms of total degree exactly d.
  Polynomial homogeneous_part(int d) const;
  Polynomial multiplied_by(const Monomial& m) const;

  Scalar evaluate(std::span<const Scalar> x) const;
  double max_abs_coefficient() const;

  std::string str(std::span<const std::string> names) const;

 private:
  size_t n_vars_;
  std::map<Monomial, Scalar> terms_;
};

}  // namespace paulipolar

#endif
