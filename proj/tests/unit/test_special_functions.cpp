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

#include <cmath>
#include <numbers>
#include <sstream>

#include "hornrmt/error.hpp"
#include "hornrmt/function_table.hpp"
#include "hornrmt/quadrature.hpp"
#include "hornrmt/special_functions.hpp"
#include "oracles.hpp"

namespace hornrmt {
namespace {

TEST(HermiteH, Base) {
  EXPECT_EQ(hermite_H(0, 0.7), 1.0);
  EXPECT_EQ(hermite_H(1, 0.7), 1.4);
  EXPECT_EQ(hermite_H(2, 1.0), 2.0);
  EXPECT_EQ(hermite_H(3, 1.0), -4.0);
}

TEST(HermiteH, RecurrenceMatchesExplicitSumExactly) {
  for (unsigned k = 0; k <= 12; ++k)
    for (int x = -2; x <= 2; ++x) {
      const oracle::Rational expected = oracle::hermite_explicit(k, x);
      EXPECT_EQ(oracle::Rational(hermite_H(k, x)), expected) << "k=" << k << " x=" << x;
    }
}

TEST(HermitePhi, ValueAtZero) {
  EXPECT_NEAR(hermite_phi(0, 0.0), std::pow(std::numbers::pi, -0.25), 1e-15);
}

TEST(HermitePhi, Orthonormal) {
  for (unsigned k = 0; k <= 20; ++k) {
    const double r = 4.0 + 2.0 * std::sqrt(2.0 * k + 1.0);
    EXPECT_NEAR(integrate([k](double x) { return std::pow(hermite_phi(k, x), 2); }, -r, r), 1.0,
                1e-10)
        << "k=" << k;
  }
  EXPECT_NEAR(integrate([](double x) { return hermite_phi(0, x) * hermite_phi(1, x); }, -12, 12),
              0.0, 1e-10);
  EXPECT_NEAR(integrate([](double x) { return hermite_phi(3, x) * hermite_phi(7, x); }, -12, 12),
              0.0, 1e-10);
}

TEST(HermitePhi, LargeOrderStaysFinite) {
  for (double x : {0.0, 1.0, 10.0, 19.9, 25.0}) {
    const double v = hermite_phi(200, x);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_LT(std::abs(v), 1.0);
  }
  // phi_{2m}(0)^2 = C(2m, m) 4^{-m} / sqrt(pi)
  const double m = 100;
  const double want =
      std::exp(std::lgamma(2 * m + 1) - 2 * std::lgamma(m + 1) - 2 * m * std::log(2.0)) /
      std::sqrt(std::numbers::pi);
  EXPECT_NEAR(hermite_phi(200, 0.0) * hermite_phi(200, 0.0), want, 1e-12 * want);
}

TEST(SingleEigenvalueDensity, NEqualsOne) {
  for (double x : {-1.5, 0.0, 0.4, 2.0})
    EXPECT_NEAR(single_eigenvalue_density(1, x), std::exp(-x * x) / std::sqrt(std::numbers::pi),
                1e-15);
}

TEST(SingleEigenvalueDensity, Normalized) {
  for (unsigned n : {2u, 3u, 4u, 8u})
    EXPECT_NEAR(integrate([n](double x) { return single_eigenvalue_density(n, x); }, -12, 12), 1.0,
                1e-9);
}

TEST(SingleEigenvalueDensity, ChristoffelDarbouxFormAgrees) {
  for (unsigned n = 1; n <= 10; ++n)
    for (int i = 0; i < 1000; ++i) {
      const double x = -6.0 + 12.0 * i / 999.0;
      ASSERT_NEAR(single_eigenvalue_density(n, x), single_eigenvalue_density_cd(n, x), 1e-12)
          << "n=" << n << " x=" << x;
    }
}

TEST(SingleEigenvalueDensitySum, Scaling) {
  for (double x : {-2.0, 0.1, 1.3}) {
    EXPECT_EQ(single_eigenvalue_density_sum(3, 1, x), single_eigenvalue_density(3, x));
    EXPECT_NEAR(single_eigenvalue_density_sum(4, 3, x),
                single_eigenvalue_density(4, x / std::sqrt(3.0)) / std::sqrt(3.0), 1e-15);
  }
  EXPECT_NEAR(integrate([](double x) { return single_eigenvalue_density_sum(3, 2, x); }, -15, 15),
              1.0, 1e-9);
}

TEST(SingleEigenvalueDensitySum, VarianceLinearInK) {
  auto variance = [](unsigned k) {
    return integrate([k](double x) { return x * x * single_eigenvalue_density_sum(2, k, x); },
                     -20, 20);
  };
  const double v1 = variance(1);
  // GUE(2): E[x^2] = (1/n) E Tr A^2 = (1/2)(2 * 1/2 + 2 * 1/2) = 1
  EXPECT_NEAR(v1, 1.0, 1e-10);
  for (unsigned k : {2u, 3u, 5u}) EXPECT_NEAR(variance(k), k * v1, 1e-9);
}

TEST(Pochhammer, Basics) {
  EXPECT_EQ(pochhammer(2.5, 0), 1.0);
  EXPECT_EQ(pochhammer(1.0, 5), 120.0);
  EXPECT_EQ(pochhammer(-1.0, 2), 0.0);
  EXPECT_EQ(pochhammer(oracle::Rational(1, 2), 3), oracle::Rational(15, 8));
}

TEST(ConfluentF, Examples) {
  EXPECT_EQ(confluent_F(-3, 2.0, 0.0), 1.0);
  EXPECT_EQ(confluent_F(0.7, 2.5, 0.0), 1.0);
  for (double z : {-2.0, 0.3, 5.0}) EXPECT_NEAR(confluent_F(-1, 2.0, z), 1.0 - z / 2.0, 1e-15);
  EXPECT_EQ(confluent_F(-1, 2.0, -0.5), 1.25);
}

TEST(ConfluentF, ExactRationalAgreesWithSeriesOracle) {
  for (int a = 0; a >= -8; --a)
    for (const oracle::Rational& z : {oracle::Rational(-1, 2), oracle::Rational(-1),
                                      oracle::Rational(3, 7)})
      EXPECT_EQ(confluent_F_terminating<oracle::Rational>(a, 2, z),
                oracle::hypergeometric_series(a, 2, z));
}

TEST(ConfluentF, HornerOnCoefficientsAgrees) {
  for (int a = 0; a >= -10; --a) {
    const std::vector<double> c = confluent_F_coefficients(a, 2.0);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(1 - a));
    for (double z : {-3.0, -0.5, 0.25, 1.7}) {
      double h = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) h = h * z + *it;
      EXPECT_NEAR(h, confluent_F(a, 2.0, z), 1e-14 * std::max(1.0, std::abs(h)));
    }
  }
}

TEST(ConfluentF, NonTerminatingSeries) {
  // F(a, a; z) = e^z
  EXPECT_NEAR(confluent_F(0.5, 0.5, 1.3), std::exp(1.3), 1e-13);
}

TEST(ConfluentF, Rejections) {
  EXPECT_THROW(confluent_F(-1, 0.0, 1.0), DomainError);
  EXPECT_THROW(confluent_F(-1, -2.0, 1.0), DomainError);
  EXPECT_THROW(confluent_F(-1, 2.0, INFINITY), DomainError);
  EXPECT_THROW(confluent_F(-1, 2.0, NAN), DomainError);
}

TEST(BinaryEntropy, Values) {
  EXPECT_NEAR(binary_entropy(0.5), std::log(2.0), 1e-15);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.3), binary_entropy(0.7), 1e-15);
  EXPECT_THROW(binary_entropy(-0.01), DomainError);
  EXPECT_THROW(binary_entropy(1.01), DomainError);
}

TEST(F0, AntisymmetryAndDerivative) {
  EXPECT_NEAR(F0(0.5), 0.0, 1e-16);
  EXPECT_NEAR(F0(0.3) + F0(0.7), 0.0, 1e-14);
  for (int i = 1; i <= 99; ++i) {
    const double x = i / 100.0;
    ASSERT_NEAR(F0(1.0 - x), -F0(x), 1e-13);
  }
  EXPECT_NEAR(oracle::derivative([](double x) { return F0(x); }, 0.4, 1e-5), binary_entropy(0.4),
              1e-8);
  EXPECT_THROW(F0(1.5), DomainError);
}

TEST(F1, ReflectionEndpointAndDerivative) {
  EXPECT_NEAR(F1(0.3) - F1(0.7), F0(0.3), 1e-14);
  for (int i = 1; i <= 99; ++i) {
    const double x = i / 100.0;
    ASSERT_NEAR(F1(x) - F1(1.0 - x), F0(x), 1e-13);
  }
  EXPECT_NEAR(F1(0.0), -5.0 / 36.0, 1e-15);
  // F1(x) - F1(0) = int_0^x t H2(t) dt
  EXPECT_NEAR(F1(0.8) - F1(0.0),
              integrate([](double t) { return t * binary_entropy(t); }, 0.0, 0.8), 1e-11);
  EXPECT_NEAR(oracle::derivative([](double x) { return F1(x); }, 0.6, 1e-5),
              0.6 * binary_entropy(0.6), 1e-8);
  EXPECT_THROW(F1(-0.1), DomainError);
}

TEST(RealFunctionTable, ValidatesAndWritesCsv) {
  EXPECT_THROW(RealFunctionTable({0.0, 1.0}, {1.0}), DomainError);
  EXPECT_THROW(RealFunctionTable({0.0, 0.0}, {1.0, 2.0}), DomainError);
  const RealFunctionTable t = RealFunctionTable::tabulate([](double x) { return x / 3.0; }, 0, 1, 2);
  std::ostringstream os;
  t.write_csv(os);
  EXPECT_EQ(os.str(), "x,value\n0,0\n1,0.33333333333333331\n");
}

}  // namespace
}  // namespace hornrmt
