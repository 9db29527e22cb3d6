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

#include "hornrmt/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hornrmt/error.hpp"

namespace hornrmt {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  if (u.size() == 0) return 0.0;
  const ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff();
}

HermitianMatrix HermitianMatrix::from_raw(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << "HermitianMatrix requires a non-empty square matrix, got " << m.rows() << "x"
       << m.cols();
    throw DomainError(os.str());
  }
  const double defect = hermiticity_defect(m);
  if (!(defect <= tolerance)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max|M - M^dagger| = " << defect << " exceeds "
       << tolerance;
    throw DomainError(os.str());
  }
  return symmetrized(m);
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  return HermitianMatrix(std::move(h));
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianMatrix(ComplexMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return HermitianMatrix(std::move(m));
}

double HermitianMatrix::trace() const { return m_.diagonal().real().sum(); }

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  detail::require(dim() == other.dim(), "HermitianMatrix sum: dimension mismatch");
  return HermitianMatrix(m_ + other.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(m_ * s); }

UnitaryMatrix UnitaryMatrix::from_raw(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DomainError("UnitaryMatrix requires a non-empty square matrix");
  }
  const double defect = unitarity_defect(m);
  if (!(defect <= tolerance)) {
    std::ostringstream os;
    os << "matrix is not unitary: max|U^dagger U - I| = " << defect << " exceeds "
       << tolerance;
    throw DomainError(os.str());
  }
  return UnitaryMatrix(m);
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  detail::require(dim >= 1, "UnitaryMatrix::identity: dim must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryMatrix(ComplexMatrix::Identity(n, n));
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiRelativeTolerance = 1e-14;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p, q) with G = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on
// coordinates (p, q): a <- G^dagger a G, v <- v G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

EigenDecomposition eigh(const HermitianMatrix& h) {
  ComplexMatrix a = h.matrix();
  const Eigen::Index n = a.rows();
  detail::require(n >= 1, "eigh: empty matrix");
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = a.norm();
  const double target = kJacobiRelativeTolerance * scale;
  bool converged = scale == 0.0 || off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged) {
    std::ostringstream os;
    os << "eigh: Jacobi sweeps did not converge, off-diagonal norm " << off_diagonal_norm(a)
       << " vs target " << target;
    throw NumericalError(os.str());
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() > a(j, j).real();
  });
  std::vector<double> values(static_cast<std::size_t>(n));
  ComplexMatrix sorted(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = a(order[k], order[k]).real();
    sorted.col(k) = v.col(order[k]);
  }
  return {Spectrum(std::move(values)), UnitaryMatrix(std::move(sorted))};
}

Spectrum eigenvalues(const HermitianMatrix& h) { return eigh(h).spectrum; }

UnitaryMatrix sample_haar_unitary(std::size_t dim, RandomStream& stream) {
  detail::require(dim >= 1, "sample_haar_unitary: dim must be at least 1");
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) z(i, j) = stream.complex_gaussian();

  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    // A zero pivot has probability zero; leave that column's phase alone.
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return UnitaryMatrix(std::move(q));
}

HermitianMatrix conjugate_orbit(const Spectrum& a, const UnitaryMatrix& u) {
  if (a.dim() != u.dim()) {
    std::ostringstream os;
    os << "conjugate_orbit: spectrum has dim " << a.dim() << " but unitary has dim "
       << u.dim();
    throw DomainError(os.str());
  }
  const auto n = static_cast<Eigen::Index>(a.dim());
  ComplexMatrix scaled = u.matrix();
  for (Eigen::Index j = 0; j < n; ++j) scaled.col(j) *= a[static_cast<std::size_t>(j)];
  return HermitianMatrix::symmetrized(scaled * u.matrix().adjoint());
}

HermitianMatrix matrix_exp(const HermitianMatrix& h) {
  const EigenDecomposition ed = eigh(h);
  std::vector<double> e(ed.spectrum.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::exp(ed.spectrum[i]);
  const auto n = static_cast<Eigen::Index>(e.size());
  ComplexMatrix scaled = ed.vectors.matrix();
  for (Eigen::Index j = 0; j < n; ++j) scaled.col(j) *= e[static_cast<std::size_t>(j)];
  return HermitianMatrix::symmetrized(scaled * ed.vectors.matrix().adjoint());
}

double vandermonde(std::span<const double> x) {
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) prod *= x[i] - x[j];
  return prod;
}

}  // namespace hornrmt
