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


#ifndef HORNRMT_DERIVATIVE_PRINCIPLE_HPP
#define HORNRMT_DERIVATIVE_PRINCIPLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hornrmt/weighted_density.hpp"

namespace hornrmt {

/// Ordered product of difference operators (d/dx_i - d/dx_j).
struct DiffOperatorProduct {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  /// The C(n,2) pairs i < j in lexicographic order, i.e. Delta(d/dx).
  static DiffOperatorProduct vandermonde(std::size_t n);

  WeightedDensity apply(const WeightedDensity& d) const;
};

/// Exact d/dx_i of a weighted density (0-based i).
WeightedDensity partial_derivative(const WeightedDensity& d, std::size_t i);

/// prod_{i<j} (d/dx_i - d/dx_j) applied to d.
WeightedDensity apply_vandermonde_operator(const WeightedDensity& d);

/// Eigenvalue density from the density q of the diagonal of a unitarily
/// invariant random matrix:
///   p = (-1)^{C(n,2)} / prod_{k=1}^{n} k! * Delta(x) * Delta(d/dx) q.
/// The caller is responsible for the invariance hypothesis.
WeightedDensity derivative_principle(const WeightedDensity& q);

/// Diagonal density of a sum of K GUE(n) matrices: i.i.d. N(0, K/2)
/// coordinates, (pi K)^{-n/2} exp(-sum x_i^2 / K).
WeightedDensity gue_diag_density(unsigned n, unsigned K);

/// Diagonal density of a sum of K Wishart(m, n) matrices: i.i.d.
/// Gamma(Kn, 1) coordinates, prod x_i^{Kn-1} e^{-x_i} / Gamma(Kn)^m.
WeightedDensity wishart_diag_density(unsigned m, unsigned n, unsigned K);

/// Joint eigenvalue density of a sum of K GUE(n) matrices as a weighted
/// density: (2/K)^{C(n,2)} (K pi)^{-n/2} / prod j! * Delta^2 * exp(-sum x_i^2 / K).
WeightedDensity gue_sum_closed_form(unsigned n, unsigned K);

/// Joint eigenvalue density of a sum of K Wishart(m, n) matrices:
///   Delta^2 prod w^{Kn-m} e^{-w} / prod_{j=1}^{m} Gamma(Kn-m+j) Gamma(1+j).
WeightedDensity wishart_sum_closed_form(unsigned m, unsigned n, unsigned K);

struct Normalization {
  WeightedDensity density;
  SymbolicConstant integral;
};

/// Integrates d exactly term by term (Gaussian or Gamma moments) and returns
/// d divided by its integral together with the integral. Gaussian weights
/// must have lin = 0; Gamma weights need lin > 0. Throws DomainError for
/// non-integrable weights or a zero integral.
Normalization normalize(const WeightedDensity& d);

}  // namespace hornrmt

#endif  // HORNRMT_DERIVATIVE_PRINCIPLE_HPP
