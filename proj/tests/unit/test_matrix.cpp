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


#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <vector>

#include "hornrmt/ensembles.hpp"
#include "hornrmt/error.hpp"
#include "hornrmt/matrix.hpp"
#include "hornrmt/statistics.hpp"

namespace hornrmt {
namespace {

ComplexMatrix random_hermitian(std::size_t n, RandomStream& s) {
  const auto d = static_cast<Eigen::Index>(n);
  ComplexMatrix z(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) z(i, j) = s.complex_gaussian();
  return z + z.adjoint();
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Spectrum, SortsDescending) {
  const Spectrum s{1.0, 3.0, 2.0};
  EXPECT_EQ(s[0], 3.0);
  EXPECT_EQ(s[1], 2.0);
  EXPECT_EQ(s[2], 1.0);
  EXPECT_EQ(s.sum(), 6.0);
}

TEST(HermitianMatrix, RejectsNonHermitianWithNorm) {
  ComplexMatrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  try {
    HermitianMatrix::from_raw(m);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(HermitianMatrix, AcceptsWithinTolerance) {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(2.0, 1.0), Complex(2.0, -1.0 + 5e-13), -1.0;
  const HermitianMatrix h = HermitianMatrix::from_raw(m);
  EXPECT_EQ(hermiticity_defect(h.matrix()), 0.0);
  EXPECT_EQ(h(0, 0).imag(), 0.0);
}

TEST(Eigh, DiagonalInput) {
  const std::array<double, 2> d{2.0, 1.0};
  const EigenDecomposition e = eigh(HermitianMatrix::diagonal(d));
  EXPECT_EQ(e.spectrum, (Spectrum{2.0, 1.0}));
  EXPECT_LT(max_abs(e.vectors.matrix() - ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(Eigh, PauliX) {
  ComplexMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const Spectrum s = eigenvalues(HermitianMatrix::from_raw(x));
  EXPECT_NEAR(s[0], 1.0, 1e-15);
  EXPECT_NEAR(s[1], -1.0, 1e-15);
}

TEST(Eigh, ReconstructsRandomDraws) {
  for (std::uint64_t id = 0; id < 100; ++id) {
    RandomStream s(7, id);
    const HermitianMatrix h = HermitianMatrix::symmetrized(random_hermitian(5, s));
    const EigenDecomposition e = eigh(h);
    const ComplexMatrix& u = e.vectors.matrix();
    Eigen::VectorXcd lam(5);
    for (int k = 0; k < 5; ++k) lam(k) = e.spectrum[static_cast<std::size_t>(k)];
    const ComplexMatrix rebuilt = u * lam.asDiagonal() * u.adjoint();
    EXPECT_LT(max_abs(rebuilt - h.matrix()), 1e-10) << "draw " << id;
    EXPECT_LT(unitarity_defect(u), 1e-12);
    for (std::size_t k = 0; k + 1 < 5; ++k) EXPECT_GE(e.spectrum[k], e.spectrum[k + 1]);
  }
}

TEST(Eigh, AgreesWithEigenSolver) {
  for (std::size_t n : {1u, 2u, 3u, 8u, 16u}) {
    RandomStream s(11, n);
    const HermitianMatrix h = HermitianMatrix::symmetrized(random_hermitian(n, s));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h.matrix());
    const Spectrum ours = eigenvalues(h);
    for (std::size_t k = 0; k < n; ++k)
      EXPECT_NEAR(ours[k], ref.eigenvalues()(static_cast<Eigen::Index>(n - 1 - k)), 1e-11);
  }
}

TEST(Eigh, DegenerateSpectrum) {
  RandomStream s(3, 0);
  const UnitaryMatrix u = sample_haar_unitary(4, s);
  const Spectrum a{2.0, 2.0, -1.0, -1.0};
  const Spectrum out = eigenvalues(conjugate_orbit(a, u));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(out[k], a[k], 1e-12);
}

TEST(Haar, UnitaryAndReproducible) {
  for (std::size_t n : {1u, 2u, 5u, 8u}) {
    RandomStream s1(42, n), s2(42, n);
    const UnitaryMatrix u1 = sample_haar_unitary(n, s1);
    const UnitaryMatrix u2 = sample_haar_unitary(n, s2);
    EXPECT_LT(unitarity_defect(u1.matrix()), 1e-12);
    EXPECT_EQ(u1.matrix(), u2.matrix());
  }
}

TEST(Haar, DimensionOneIsPhase) {
  RandomStream s(1, 1);
  EXPECT_NEAR(std::abs(sample_haar_unitary(1, s)(0, 0)), 1.0, 1e-15);
}

TEST(Haar, RejectsDimensionZero) {
  RandomStream s(1, 1);
  EXPECT_THROW(sample_haar_unitary(0, s), DomainError);
}

TEST(Haar, SecondMomentOfEntries) {
  const std::size_t n = 3, draws = 100000;
  std::vector<double> u11(draws), u23(draws);
  const RandomStream root(5, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    RandomStream s = root.substream(i);
    const UnitaryMatrix u = sample_haar_unitary(n, s);
    u11[i] = std::norm(u(0, 0));
    u23[i] = std::norm(u(1, 2));
  }
  for (const auto* v : {&u11, &u23}) {
    const MeanEstimate m = estimate_mean(*v);
    EXPECT_LT(std::abs(m.mean - 1.0 / n), 3.0 * m.std_error);
  }
}

TEST(Haar, PhaseOfDiagonalIsUniform) {
  // Without the phase correction Householder QR biases arg U_11; Haar makes
  // E[U_11] = 0 and E[U_11^2] = 0.
  const std::size_t draws = 50000;
  std::vector<double> re(draws), re2(draws);
  const RandomStream root(6, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    RandomStream s = root.substream(i);
    const Complex z = sample_haar_unitary(2, s)(0, 0);
    re[i] = z.real();
    re2[i] = (z * z).real();
  }
  for (const auto* v : {&re, &re2}) {
    const MeanEstimate m = estimate_mean(*v);
    EXPECT_LT(std::abs(m.mean), 4.0 * m.std_error);
  }
}

TEST(ConjugateOrbit, IdentityGivesDiagonal) {
  const Spectrum a{3.0, 1.0, -2.0};
  const HermitianMatrix h = conjugate_orbit(a, UnitaryMatrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(h(i, j), Complex(i == j ? a[i] : 0.0, 0.0));
}

TEST(ConjugateOrbit, IsospectralAndTracePreserving) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t id = 0; id < 100; ++id) {
      RandomStream s(9, n * 1000 + id);
      std::vector<double> v(n);
      for (double& x : v) x = 4.0 * s.uniform() - 2.0;
      const Spectrum a(v);
      const HermitianMatrix h = conjugate_orbit(a, sample_haar_unitary(n, s));
      const Spectrum out = eigenvalues(h);
      for (std::size_t k = 0; k < n; ++k) ASSERT_NEAR(out[k], a[k], 1e-10);
      ASSERT_NEAR(h.trace(), a.sum(), 1e-12);
    }
  }
}

TEST(ConjugateOrbit, DimensionMismatch) {
  EXPECT_THROW(conjugate_orbit(Spectrum{1.0, 0.0}, UnitaryMatrix::identity(3)), DomainError);
}

TEST(MatrixExp, ZeroAndDiagonal) {
  const HermitianMatrix z = matrix_exp(HermitianMatrix::zero(3));
  EXPECT_LT(max_abs(z.matrix() - ComplexMatrix::Identity(3, 3)), 1e-15);
  const std::array<double, 3> d{0.5, -1.0, 2.0};
  const HermitianMatrix e = matrix_exp(HermitianMatrix::diagonal(d));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(e(i, i).real(), std::exp(d[i]), 1e-14);
}

TEST(MatrixExp, TraceMatchesTaylorSeries) {
  for (std::uint64_t id = 0; id < 20; ++id) {
    RandomStream s(13, id);
    ComplexMatrix m = random_hermitian(4, s);
    m /= m.norm();  // Frobenius norm 1 bounds the operator norm
    const HermitianMatrix h = HermitianMatrix::symmetrized(m);
    ComplexMatrix term = ComplexMatrix::Identity(4, 4), sum = term;
    for (int k = 1; k < 30; ++k) {
      term = term * h.matrix() / static_cast<double>(k);
      sum += term;
    }
    EXPECT_NEAR(matrix_exp(h).trace(), sum.trace().real(), 1e-10);
  }
}

TEST(MatrixExp, CommutingPairMultiplies) {
  const std::array<double, 3> d1{0.3, -0.7, 1.1}, d2{-0.2, 0.4, 0.9};
  const HermitianMatrix h1 = HermitianMatrix::diagonal(d1), h2 = HermitianMatrix::diagonal(d2);
  const ComplexMatrix lhs = matrix_exp(h1).matrix() * matrix_exp(h2).matrix();
  EXPECT_LT(max_abs(lhs - matrix_exp(h1 + h2).matrix()), 1e-10);
}

TEST(MatrixExp, PositiveDefinite) {
  RandomStream s(17, 0);
  const HermitianMatrix h = HermitianMatrix::symmetrized(random_hermitian(5, s));
  const Spectrum e = eigenvalues(matrix_exp(h));
  EXPECT_GT(e[4], 0.0);
}

TEST(Vandermonde, Examples) {
  const std::array<double, 2> a{3.0, 1.0};
  const std::array<double, 3> b{3.0, 2.0, 1.0}, c{1.0, 2.0, 1.0};
  EXPECT_EQ(vandermonde(a), 2.0);
  EXPECT_EQ(vandermonde(b), 2.0);
  EXPECT_EQ(vandermonde(c), 0.0);
}

TEST(RandomStream, Reproducible) {
  RandomStream a(1, 2), b(1, 2), c(1, 3);
  for (int i = 0; i < 10; ++i) {
    const double x = a.normal();
    EXPECT_EQ(x, b.normal());
    EXPECT_NE(x, c.normal());
  }
}

}  // namespace
}  // namespace hornrmt
