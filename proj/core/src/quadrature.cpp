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

#include "hornrmt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "hornrmt/error.hpp"

namespace hornrmt {
namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  const QuadratureOptions& options) {
  QuadratureResult result;
  if (!(std::isfinite(lo) && std::isfinite(hi))) throw DomainError("quadrature bounds must be finite");
  if (lo == hi) {
    result.converged = true;
    return result;
  }
  double sign = 1.0;
  if (hi < lo) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  const double width = hi - lo;

  // Uniform initial panels.
  const std::size_t kInitialPanels = std::max<std::size_t>(1, options.initial_panels);
  std::vector<Panel> stack;
  std::vector<double> x(2 * kInitialPanels + 1), fx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = i + 1 == x.size() ? hi : lo + width * static_cast<double>(i) / (x.size() - 1);
    fx[i] = f(x[i]);
  }
  for (std::size_t k = kInitialPanels; k-- > 0;) {
    const std::size_t i = 2 * k;
    stack.push_back({x[i], x[i + 1], x[i + 2], fx[i], fx[i + 1], fx[i + 2],
                     simpson(x[i], x[i + 2], fx[i], fx[i + 1], fx[i + 2])});
  }
  std::size_t intervals = kInitialPanels;
  double total = 0.0;
  double error = 0.0;
  bool converged = true;

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double diff = left + right - p.whole;
    const double local_tol = options.abs_tolerance * (p.b - p.a) / width;
    const bool tiny = (p.b - p.a) <= 64.0 * std::numeric_limits<double>::epsilon() *
                                          std::max(std::abs(p.a), std::abs(p.b));
    if (std::abs(diff) <= 15.0 * local_tol || tiny) {
      total += left + right + diff / 15.0;
      error += std::abs(diff) / 15.0;
      continue;
    }
    if (intervals >= options.max_intervals) {
      converged = false;
      total += left + right + diff / 15.0;
      error += std::abs(diff) / 15.0;
      continue;
    }
    ++intervals;
    stack.push_back({p.a, lm, p.m, p.fa, flm, p.fm, left});
    stack.push_back({p.m, rm, p.b, p.fm, frm, p.fb, right});
  }

  result.value = sign * total;
  result.error_estimate = error;
  result.intervals = intervals;
  result.converged = converged;
  return result;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& options) {
  const QuadratureResult r = adaptive_simpson(f, lo, hi, options);
  if (!r.converged) {
    std::ostringstream os;
    os << "quadrature on [" << lo << ", " << hi << "] did not converge: achieved error "
       << r.error_estimate << " after " << r.intervals << " intervals (tolerance "
       << options.abs_tolerance << ")";
    throw NumericalError(os.str());
  }
  return r.value;
}

double integrate_piecewise(const std::function<double(double)>& f, double lo, double hi,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& options) {
  if (hi < lo) return -integrate_piecewise(f, hi, lo, breakpoints, options);
  std::vector<double> knots{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) knots.push_back(b);
  knots.push_back(hi);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto is_break = [&](double x) {
    return std::find(breakpoints.begin(), breakpoints.end(), x) != breakpoints.end();
  };
  const double width = hi - lo;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    QuadratureOptions piece = options;
    if (width > 0.0) piece.abs_tolerance = options.abs_tolerance * (knots[i + 1] - knots[i]) / width;
    // Pieces stop one ulp short of each breakpoint.
    double a = knots[i], b = knots[i + 1];
    if (is_break(a)) a = std::nextafter(a, b);
    if (is_break(b)) b = std::nextafter(b, a);
    if (a < b) total += integrate(f, a, b, piece);
  }
  return total;
}

}  // namespace hornrmt
