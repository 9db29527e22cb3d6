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


#ifndef HORNRMT_WEIGHTED_DENSITY_HPP
#define HORNRMT_WEIGHTED_DENSITY_HPP

#include <cstddef>
#include <span>
#include <string>

#include "hornrmt/polynomial.hpp"
#include "hornrmt/symbolic_constant.hpp"

namespace hornrmt {

enum class DensityDomain { FullSpace, PositiveOrthant };

/// scale * poly(x) * prod_i x_i^pow * exp(-quad x_i^2 - lin x_i).
///
/// quad > 0 requires the full space; pow > 0 or lin != 0 with quad = 0
/// requires the positive orthant. On the full space the x^pow factor is
/// folded into poly. On the orthant the largest monomial common to all terms
/// of poly is moved into pow, so the representation of a function is unique
/// up to how the rational part is split between scale and poly.
class WeightedDensity {
 public:
  WeightedDensity(SparsePolynomial poly, Rational quad, Rational lin, unsigned pow,
                  DensityDomain domain, SymbolicConstant scale = SymbolicConstant(Rational(1)));

  std::size_t n() const noexcept { return poly_.n(); }
  const SparsePolynomial& poly() const noexcept { return poly_; }
  const Rational& quad() const noexcept { return quad_; }
  const Rational& lin() const noexcept { return lin_; }
  unsigned pow() const noexcept { return pow_; }
  DensityDomain domain() const noexcept { return domain_; }
  const SymbolicConstant& scale() const noexcept { return scale_; }

  /// Same weights, polynomial and scale replaced.
  WeightedDensity with_poly(SparsePolynomial poly, unsigned pow) const;
  WeightedDensity scaled(const SymbolicConstant& c) const;

  /// poly(x) with the rational part of scale multiplied in.
  SparsePolynomial expanded_poly() const;

  /// Sum of two densities sharing quad, lin, domain and the irrational part
  /// of scale. Differing pow values are aligned.
  WeightedDensity operator+(const WeightedDensity& o) const;
  WeightedDensity operator-(const WeightedDensity& o) const;

  /// Equality of the represented functions (exact).
  bool operator==(const WeightedDensity& o) const;

  double evaluate(std::span<const double> x) const;

  /// Canonical one-line text form, e.g.
  /// "sum(1/4 * x^(2,0) - 1/2 * x^(1,1) + 1/4 * x^(0,2)) * pi^(-1) * exp(-1/2 * sum(x_i^2)) on R^2".
  std::string to_string() const;

 private:
  void canonicalize();

  SparsePolynomial poly_;
  Rational quad_;
  Rational lin_;
  unsigned pow_;
  DensityDomain domain_;
  SymbolicConstant scale_;
};

}  // namespace hornrmt

#endif  // HORNRMT_WEIGHTED_DENSITY_HPP
