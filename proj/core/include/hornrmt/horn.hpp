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


#ifndef HORNRMT_HORN_HPP
#define HORNRMT_HORN_HPP

#include <cstddef>
#include <span>
#include <sstream>
#include <vector>

#include "hornrmt/error.hpp"
#include "hornrmt/matrix.hpp"

namespace hornrmt {

/// Permutation of {0, ..., n-1} in one-line notation: perm[j] is the image of j.
using Permutation = std::vector<std::size_t>;

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// +1 for even permutations, -1 for odd ones. Throws DomainError if `perm`
/// is not a permutation.
int permutation_sign(const Permutation& perm);

namespace detail {
void check_permutation(const Permutation& perm, std::size_t n);
}  // namespace detail

/// Partial-sum coefficient shared by B_k and A_k:
///   sum_{j<k} (a[sigma(j)] + b[tau(j)] - c[j]) - (k/n) sum_{j<n} (a[j] + b[j] - c[j]).
/// Generic in the scalar type so exact rationals can be used.
template <class T>
T horn_partial_sum(std::size_t k, const Permutation& sigma, const Permutation& tau,
                   std::span<const T> a, std::span<const T> b, std::span<const T> c) {
  const std::size_t n = a.size();
  if (b.size() != n || c.size() != n) {
    std::ostringstream os;
    os << "coefficient: dimension mismatch (" << a.size() << ", " << b.size() << ", "
       << c.size() << ")";
    throw DomainError(os.str());
  }
  if (k < 1 || k + 1 > n) {
    std::ostringstream os;
    os << "coefficient: k = " << k << " outside [1, " << (n == 0 ? 0 : n - 1) << "]";
    throw DomainError(os.str());
  }
  detail::check_permutation(sigma, n);
  detail::check_permutation(tau, n);
  T head = T(0);
  for (std::size_t j = 0; j < k; ++j) head += a[sigma[j]] + b[tau[j]] - c[j];
  T total = T(0);
  for (std::size_t j = 0; j < n; ++j) total += a[j] + b[j] - c[j];
  return head - T(static_cast<long>(k)) * total / T(static_cast<long>(n));
}

/// B_k(sigma, tau) for the diagonal C_jj of the sum (k is 1-based).
double b_coefficient(std::size_t k, const Permutation& sigma, const Permutation& tau,
                     const Spectrum& a, const Spectrum& b, std::span<const double> c_diag);

/// A_k(sigma, tau) for the spectrum c of the sum (k is 1-based).
double a_coefficient(std::size_t k, const Permutation& sigma, const Permutation& tau,
                     const Spectrum& a, const Spectrum& b, const Spectrum& c);

/// Two 2x2 spectra with their gaps alpha = a1 - a2 and beta = b1 - b2.
class SpectrumPair2 {
 public:
  /// Throws DomainError unless both spectra have dimension 2.
  SpectrumPair2(Spectrum a, Spectrum b);

  const Spectrum& a() const noexcept { return a_; }
  const Spectrum& b() const noexcept { return b_; }
  double alpha() const noexcept { return a_[0] - a_[1]; }
  double beta() const noexcept { return b_[0] - b_[1]; }
  double trace() const noexcept { return a_.sum() + b_.sum(); }
  bool degenerate() const noexcept { return alpha() == 0.0 || beta() == 0.0; }

 private:
  Spectrum a_;
  Spectrum b_;
};

/// Support (|alpha - beta|, alpha + beta) of the ordered eigenvalue gap.
struct GapInterval {
  double low = 0.0;
  double high = 0.0;
  bool contains_open(double d) const noexcept { return d > low && d < high; }
  bool contains_closed(double d) const noexcept { return d >= low && d <= high; }
};

GapInterval gap_interval(const SpectrumPair2& pair);

/// Density of the diagonal entry C11 of C = U diag(a) U^dagger + V diag(b) V^dagger
/// on the slice C11 + C22 = trace:
///   (|alpha+beta-g| + |alpha+beta+g| - |alpha-beta-g| - |alpha-beta+g|) / (4 alpha beta)
/// with g = 2 C11 - trace. Throws DegenerateOrbitError when alpha or beta is 0
/// and DomainError when `trace` differs from tr a + tr b by more than 1e-9.
double diag_pdf_2x2(const SpectrumPair2& pair, double c11, double trace);

/// Density of the ordered gap c1 - c2: d / (2 alpha beta) on the open
/// interval (|alpha - beta|, alpha + beta), zero elsewhere.
double eigen_gap_pdf_2x2(const SpectrumPair2& pair, double gap);

/// The same gap density obtained by applying -(1/2) Delta(c) (d/dc1 - d/dc2)
/// to the diagonal density, with the derivative of the piecewise-linear
/// bracket taken analytically. Rejects gap < 0 and gaps at the kinks
/// |alpha - beta| and alpha + beta.
double eigen_pdf_2x2_from_diag(const SpectrumPair2& pair, double gap);

}  // namespace hornrmt

#endif  // HORNRMT_HORN_HPP
