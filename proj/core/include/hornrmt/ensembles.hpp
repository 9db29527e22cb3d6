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

#ifndef HORNRMT_ENSEMBLES_HPP
#define HORNRMT_ENSEMBLES_HPP

#include <span>

#include "hornrmt/matrix.hpp"
#include "hornrmt/random_stream.hpp"

namespace hornrmt {

/// Sum of `summand_count` i.i.d. GUE(dim) matrices.
struct GueParams {
  unsigned dim = 1;
  unsigned summand_count = 1;

  /// Throws DomainError unless dim >= 1 and summand_count >= 1.
  void validate() const;
};

/// Sum of `summand_count` i.i.d. rows x rows Wishart matrices Z Z^dagger,
/// Z a rows x cols standard complex Gaussian matrix.
struct WishartParams {
  unsigned rows = 1;
  unsigned cols = 1;
  unsigned summand_count = 1;

  /// Throws DomainError unless all are positive and rows <= cols.
  void validate() const;
};

/// GUE draw A = (Z + Z^dagger)/2 with Z standard complex Gaussian.
HermitianMatrix sample_gue(unsigned n, RandomStream& stream);

/// Sum of K independent GUE(n) draws.
HermitianMatrix sample_gue_sum(const GueParams& params, RandomStream& stream);

/// Complex Wishart draw W = Z Z^dagger, Z m x n, m <= n.
HermitianMatrix sample_wishart(unsigned m, unsigned n, RandomStream& stream);

/// Sum of K independent Wishart(m, n) draws.
HermitianMatrix sample_wishart_sum(const WishartParams& params, RandomStream& stream);

/// C = U diag(a) U^dagger + V diag(b) V^dagger with U, V independent Haar.
HermitianMatrix sample_orbit_sum(const Spectrum& a, const Spectrum& b, RandomStream& stream);

/// Joint eigenvalue density of a sum of K GUE(n) matrices, for an unordered
/// argument vector (integrates to 1 over R^n):
///   (2/K)^{C(n,2)} (K pi)^{-n/2} (prod_{j<=n} j!)^{-1} Delta(s)^2 exp(-<s,s>/K).
double gue_sum_eigen_pdf(unsigned n, unsigned K, std::span<const double> s);

/// Joint eigenvalue density of a sum of K Wishart(m, n) matrices, unordered
/// arguments, zero off the positive orthant:
///   Delta(w)^2 prod_j w_j^{Kn-m} e^{-w_j} / prod_{j<=m} Gamma(Kn-m+j) Gamma(1+j).
double wishart_sum_eigen_pdf(unsigned m, unsigned n, unsigned K, std::span<const double> w);

/// Density of the ordered gap c1 - c2 >= 0 of a GUE(2)-sum, by quadrature of
/// the joint density along the trace direction.
double gue_sum_gap_density(unsigned K, double gap);

/// Density of the ordered gap w1 - w2 >= 0 of a Wishart(2, n)-sum, by
/// quadrature of the joint density along the trace direction.
double wishart_sum_gap_density(unsigned n, unsigned K, double gap);

}  // namespace hornrmt

#endif  // HORNRMT_ENSEMBLES_HPP
