// Copyright 2026 The hornrmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HORNRMT_POLYNOMIAL_HPP
#define HORNRMT_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornrmt/symbolic_constant.hpp"

namespace hornrmt {

/// Multivariate polynomial in x_1..x_n with exact rational coefficients.
/// Zero coefficients are never stored.
class SparsePolynomial {
 public:
  using Exponent = std::vector<unsigned>;
  using Terms = std::map<Exponent, Rational>;

  explicit SparsePolynomial(std::size_t n = 0) : n_(n) {}

  static SparsePolynomial constant(std::size_t n, const Rational& c);
  /// x_i (0-based index).
  static SparsePolynomial variable(std::size_t n, std::size_t i);
  static SparsePolynomial monomial(std::size_t n, Exponent e, const Rational& c);

  std::size_t n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  unsigned total_degree() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator-() const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const Rational& c) const;
  bool operator==(const SparsePolynomial& o) const = default;

  /// d/dx_i.
  SparsePolynomial derivative(std::size_t i) const;
  /// x_i P.
  SparsePolynomial times_variable(std::size_t i, unsigned power = 1) const;
  /// Polynomial with x_i and x_j exchanged.
  SparsePolynomial swapped(std::size_t i, std::size_t j) const;

  /// Componentwise minimum exponent over all terms (the largest monomial
  /// dividing P). All zeros for the zero polynomial.
  Exponent common_monomial() const;
  /// P / x^e; every term must be divisible.
  SparsePolynomial divided_by_monomial(const Exponent& e) const;

  /// Exact quotient P / d, or nullopt if d does not divide P.
  std::optional<SparsePolynomial> divide_exact(const SparsePolynomial& d) const;

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

  /// Terms in descending lexicographic exponent order, e.g.
  /// "1 * x^(2,0) - 2 * x^(1,1) + 1 * x^(0,2)"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_same_n(const SparsePolynomial& o) const;

  std::size_t n_;
  Terms terms_;
};

/// prod_{i<j} (x_i - x_j) as a polynomial in n variables.
SparsePolynomial vandermonde_polynomial(std::size_t n);

}  // namespace hornrmt

#endif  // HORNRMT_POLYNOMIAL_HPP
