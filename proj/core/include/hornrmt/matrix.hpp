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

#ifndef HORNRMT_MATRIX_HPP
#define HORNRMT_MATRIX_HPP

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hornrmt/random_stream.hpp"

namespace hornrmt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Real eigenvalue vector kept in non-increasing order.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the values into descending order.
  explicit Spectrum(std::vector<double> values);
  Spectrum(std::initializer_list<double> values) : Spectrum(std::vector<double>(values)) {}

  std::size_t dim() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const noexcept { return values_; }
  double sum() const noexcept;

  bool operator==(const Spectrum&) const = default;

 private:
  std::vector<double> values_;
};

struct EigenDecomposition;
class UnitaryMatrix;

/// Dense complex Hermitian matrix.
class HermitianMatrix {
 public:
  static constexpr double kConstructionTolerance = 1e-12;

  HermitianMatrix() = default;

  /// Validates Hermiticity of raw data to kConstructionTolerance (max-entry
  /// norm of M - M^dagger) and throws DomainError with the measured norm
  /// otherwise. The stored matrix is the exact Hermitian part of `m`.
  static HermitianMatrix from_raw(const ComplexMatrix& m,
                                  double tolerance = kConstructionTolerance);
  /// Stores (m + m^dagger)/2 without checking. For samplers whose output is
  /// Hermitian up to rounding.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);
  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double trace() const;

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator*(double s) const;

 private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Dense unitary matrix.
class UnitaryMatrix {
 public:
  static constexpr double kConstructionTolerance = 1e-12;

  UnitaryMatrix() = default;
  /// Validates max-entry |U^dagger U - I| <= tolerance.
  static UnitaryMatrix from_raw(const ComplexMatrix& m,
                                double tolerance = kConstructionTolerance);
  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(u_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return u_; }
  Complex operator()(std::size_t i, std::size_t j) const { return u_(i, j); }

 private:
  friend EigenDecomposition eigh(const HermitianMatrix& h);
  friend UnitaryMatrix sample_haar_unitary(std::size_t dim, RandomStream& stream);
  explicit UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {}
  ComplexMatrix u_;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Columns are eigenvectors, in the same order as `spectrum`.
  UnitaryMatrix vectors;
};

/// Max-entry norm of M - M^dagger.
double hermiticity_defect(const ComplexMatrix& m);
/// Max-entry norm of U^dagger U - I.
double unitarity_defect(const ComplexMatrix& u);

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Sweeps stop once the off-diagonal Frobenius mass is below
/// 1e-14 * ||H||_F. Eigenvalues are returned in descending order; the basis
/// inside a degenerate eigenspace is unspecified.
EigenDecomposition eigh(const HermitianMatrix& h);

/// Eigenvalues only (descending).
Spectrum eigenvalues(const HermitianMatrix& h);

/// Haar-distributed unitary: QR of an i.i.d. standard complex Gaussian
/// matrix, with the columns of Q rescaled by the phases of diag(R).
UnitaryMatrix sample_haar_unitary(std::size_t dim, RandomStream& stream);

/// U diag(a) U^dagger.
HermitianMatrix conjugate_orbit(const Spectrum& a, const UnitaryMatrix& u);

/// exp(H) through the eigendecomposition.
HermitianMatrix matrix_exp(const HermitianMatrix& h);

/// prod_{i<j} (x_i - x_j).
double vandermonde(std::span<const double> x);

}  // namespace hornrmt

#endif  // HORNRMT_MATRIX_HPP
