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

#ifndef HORNRMT_QUADRATURE_HPP
#define HORNRMT_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>

namespace hornrmt {

struct QuadratureOptions {
  double abs_tolerance = 1e-11;
  /// Cap on the number of subintervals the adaptive scheme may create.
  std::size_t max_intervals = std::size_t{1} << 20;
  /// Uniform panels the refinement starts from.
  std::size_t initial_panels = 32;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

/// Adaptive Simpson with Richardson correction on [lo, hi], refined from
/// options.initial_panels uniform panels. The tolerance is
/// distributed over subintervals in proportion to their width.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  const QuadratureOptions& options = {});

/// As adaptive_simpson but throws NumericalError (with the achieved error
/// estimate) when the interval cap is hit before the tolerance is met.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& options = {});

/// Integrates piece by piece between consecutive sorted breakpoints so that
/// kinks of piecewise-smooth integrands fall on interval ends. Pieces stop
/// one ulp short of each breakpoint, so f may jump there. Breakpoints
/// outside [lo, hi] are ignored.
double integrate_piecewise(const std::function<double(double)>& f, double lo, double hi,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& options = {});

}  // namespace hornrmt

#endif  // HORNRMT_QUADRATURE_HPP
