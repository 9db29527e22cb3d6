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

#include <array>
#include <cmath>

#include "hornrmt/ensembles.hpp"
#include "hornrmt/error.hpp"
#include "hornrmt/golden_thompson.hpp"
#include "hornrmt/statistics.hpp"

namespace hornrmt {
namespace {

double kappa2(double t) { return 0.25 * std::exp(t * t / 4) * (t * t + 4); }
double kappa3(double t) {
  return std::exp(t * t / 4) * (std::pow(t, 4) + 12 * t * t + 24) / 24;
}
double kappa4(double t) {
  return std::exp(t * t / 4) * (t * t * std::pow(t * t + 12, 2) + 192) / 192;
}

TEST(ExpectedMatrixFunction, Examples) {
  for (unsigned n = 2; n <= 4; ++n) {
    EXPECT_NEAR(expected_matrix_function_gue(n, [](double) { return 1.0; }), 1.0, 1e-12);
    EXPECT_LT(std::abs(expected_matrix_function_gue(n, [](double x) { return x; })), 1e-12);
  }
  EXPECT_NEAR(expected_matrix_function_gue(2, [](double x) { return std::exp(x); }, 1.0),
              std::exp(0.25) * 1.25, 1e-12);
}

TEST(KappaExp, PrintedPolynomials) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(kappa_exp(n, 0.0), 1.0);
  for (double t : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(kappa_exp(2, t), kappa2(t), 1e-12 * kappa2(t));
    EXPECT_NEAR(kappa_exp(3, t), kappa3(t), 1e-12 * kappa3(t));
    EXPECT_NEAR(kappa_exp(4, t), kappa4(t), 1e-12 * kappa4(t));
  }
}

TEST(KappaExp, MatchesQuadrature) {
  for (unsigned n : {1u, 2u, 3u, 4u, 6u, 10u, 16u})
    for (double t : {-1.5, 0.5, 1.0, 3.0}) {
      const double q =
          expected_matrix_function_gue(n, [t](double x) { return std::exp(t * x); }, t);
      EXPECT_NEAR(q, kappa_exp(n, t), 1e-9 * q) << n << " " << t;
    }
}

TEST(ExpectedExpSum, PrintedFormulas) {
  for (double t : {0.5, 1.0, 2.0}) {
    const double e = std::exp(t * t / 2);
    const double f2 = 0.5 * e * (t * t + 2);
    const double f3 = e * (std::pow(t, 4) + 6 * t * t + 6) / 6;
    const double f4 = e * (t * t * std::pow(t * t + 6, 2) + 24) / 24;
    EXPECT_NEAR(expected_exp_sum(2, 2, t), f2, 1e-12 * f2);
    EXPECT_NEAR(expected_exp_sum(3, 2, t), f3, 1e-12 * f3);
    EXPECT_NEAR(expected_exp_sum(4, 2, t), f4, 1e-12 * f4);
  }
}

TEST(ExpectedExpSum, SingleSummandIsKappa) {
  for (unsigned n = 1; n <= 5; ++n)
    for (double t : {0.5, 1.0, 2.0}) EXPECT_NEAR(expected_exp_sum(n, 1, t), kappa_exp(n, t), 1e-9);
}

TEST(AlphaRatio, PrintedFractions) {
  EXPECT_EQ(alpha_ratio(1), Rational(1));
  EXPECT_EQ(alpha_ratio(2), Rational(25, 24));
  EXPECT_EQ(alpha_ratio(3), Rational(1369, 1248));
  EXPECT_EQ(alpha_ratio(4), Rational(130321, 112128));
}

TEST(AlphaRatio, ExceedsOneAndIncreases) {
  Rational prev = alpha_ratio(2);
  EXPECT_GT(prev, 1);
  for (unsigned n = 3; n <= 50; ++n) {
    const Rational a = alpha_ratio(n);
    EXPECT_GT(a, prev) << n;
    prev = a;
  }
}

TEST(LnAlphaScan, RowsAndFit) {
  const RealFunctionTable t = ln_alpha_scan(50);
  ASSERT_EQ(t.size(), 49u);
  EXPECT_EQ(t.abscissae().front(), 2.0);
  EXPECT_NEAR(t.ordinates()[0], 0.040822, 5e-7);
  EXPECT_NEAR(t.ordinates()[1], 0.0925383, 5e-8);
  EXPECT_NEAR(t.ordinates()[2], 0.15036, 5e-6);
  EXPECT_NEAR(t.ordinates()[0], std::log(25.0 / 24.0), 1e-15);
  EXPECT_THROW(ln_alpha_scan(1), DomainError);

  const LinearFit exact = least_squares_fit(RealFunctionTable({1, 2, 3, 4}, {1, 3, 5, 7}), 0, 10);
  EXPECT_NEAR(exact.slope, 2.0, 1e-14);
  EXPECT_NEAR(exact.intercept, -1.0, 1e-14);
  EXPECT_EQ(exact.points, 4u);
  const LinearFit tail = least_squares_fit(t, 30, 50);
  EXPECT_EQ(tail.points, 21u);
  EXPECT_GT(tail.slope, 0.0);
  EXPECT_THROW(least_squares_fit(t, 10, 10), DomainError);
}

TEST(GoldenThompson, CommutingTracesAgree) {
  const std::array<double, 3> dx{0.3, -1.2, 2.0}, dy{1.1, 0.4, -0.5};
  const GtTraces tr =
      golden_thompson_traces(HermitianMatrix::diagonal(dx), HermitianMatrix::diagonal(dy));
  EXPECT_NEAR(tr.exp_of_sum, tr.product_of_exps, 1e-13 * tr.exp_of_sum);
  double want = 0.0;
  for (int i = 0; i < 3; ++i) want += std::exp(dx[i] + dy[i]);
  EXPECT_NEAR(tr.exp_of_sum, want, 1e-13 * want);
}

TEST(GoldenThompson, InequalityPerDraw) {
  const RandomStream root(51, 0);
  for (unsigned n = 2; n <= 5; ++n)
    for (std::uint64_t i = 0; i < 500; ++i) {
      RandomStream s = root.substream(i + 1000 * n);
      const HermitianMatrix x = sample_gue(n, s), y = sample_gue(n, s);
      const GtTraces tr = golden_thompson_traces(x, y);
      ASSERT_LE(tr.exp_of_sum, tr.product_of_exps * (1 + 1e-12));
    }
}

TEST(GoldenThompson, EmpiricalRatio) {
  const GtReport r = gt_empirical(2, 20000, RandomStream(52, 0));
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.samples, 20000u);
  EXPECT_EQ(r.analytic_ratio, 25.0 / 24.0);
  EXPECT_LT(std::abs(r.empirical_ratio - r.analytic_ratio), 3 * r.std_error);
  EXPECT_NE(r.to_json().find("\"stderr\":"), std::string::npos);
}

TEST(GoldenThompson, WorkerCountDoesNotChangeResult) {
  const GtReport a = gt_empirical(3, 2000, RandomStream(53, 0), 1);
  const GtReport b = gt_empirical(3, 2000, RandomStream(53, 0), 3);
  EXPECT_EQ(a.empirical_ratio, b.empirical_ratio);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(ConsistencyTriangle, MonteCarloAgainstKappa) {
  for (unsigned n = 2; n <= 4; ++n)
    for (double t : {0.5, 1.0}) {
      const ExpMeanEstimate m = monte_carlo_exp_mean(n, t, 20000, RandomStream(54, n));
      const double k = kappa_exp(n, t);
      EXPECT_LT(std::abs(m.normalized_trace.mean - k), 3 * m.normalized_trace.std_error);
      const double q = expected_matrix_function_gue(n, [t](double x) { return std::exp(t * x); }, t);
      EXPECT_NEAR(q, k, 1e-8);
      if (n == 2) {
        EXPECT_LT(std::abs(m.offdiag_real.mean), 3 * m.offdiag_real.std_error);
        EXPECT_LT(std::abs(m.offdiag_imag.mean), 3 * m.offdiag_imag.std_error);
      }
    }
}

}  // namespace
}  // namespace hornrmt
