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
#include <numbers>

#include "hornrmt/error.hpp"
#include "hornrmt/quadrature.hpp"

namespace hornrmt {
namespace {

TEST(Quadrature, Polynomial) {
  EXPECT_NEAR(integrate([](double x) { return x * x * x; }, 0.0, 2.0), 4.0, 1e-12);
}

TEST(Quadrature, Gaussian) {
  EXPECT_NEAR(integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0),
              std::sqrt(std::numbers::pi), 1e-11);
}

TEST(Quadrature, LogEndpoint) {
  // int_0^1 -x ln x dx = 1/4
  auto f = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
  EXPECT_NEAR(integrate(f, 0.0, 1.0), 0.25, 1e-11);
}

TEST(Quadrature, PiecewiseKinks) {
  auto f = [](double x) { return std::abs(x - 0.3) + std::abs(x - 0.7); };
  const std::array<double, 3> bp{0.3, 0.7, 5.0};
  // int_0^1 |x-0.3| + |x-0.7| = 0.29 + 0.29
  EXPECT_NEAR(integrate_piecewise(f, 0.0, 1.0, bp), 0.58, 1e-13);
}

TEST(Quadrature, ReportsNonConvergence) {
  QuadratureOptions o;
  o.max_intervals = 8;
  o.abs_tolerance = 1e-14;
  auto f = [](double x) { return std::sin(200.0 * x); };
  EXPECT_FALSE(adaptive_simpson(f, 0.0, 3.0, o).converged);
  EXPECT_THROW(integrate(f, 0.0, 3.0, o), NumericalError);
}

TEST(Quadrature, ReversedAndEmptyInterval) {
  auto f = [](double x) { return x; };
  EXPECT_EQ(integrate(f, 1.0, 1.0), 0.0);
  EXPECT_NEAR(integrate(f, 1.0, 0.0), -0.5, 1e-14);
}

}  // namespace
}  // namespace hornrmt
