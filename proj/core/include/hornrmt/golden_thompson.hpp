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


#ifndef HORNRMT_GOLDEN_THOMPSON_HPP
#define HORNRMT_GOLDEN_THOMPSON_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "hornrmt/function_table.hpp"
#include "hornrmt/matrix.hpp"
#include "hornrmt/random_stream.hpp"
#include "hornrmt/statistics.hpp"
#include "hornrmt/symbolic_constant.hpp"

namespace hornrmt {

/// kappa_n(f) = int f(x) p_n(x) dx with p_n the GUE(n) one-eigenvalue
/// density, so that E[f(H)] = kappa_n(f) I. The integral runs over [-R, R]
/// with R = max(8, growth + 8 sqrt(n)); `growth` bounds the exponential rate
/// |t| of f (0 for polynomially bounded f). Throws NumericalError when the
/// quadrature does not converge.
double expected_matrix_function_gue(unsigned n, const std::function<double(double)>& f,
                                    double growth = 0.0);

/// kappa_n(exp, t) = e^{t^2/4} F(1-n, 2; -t^2/2).
double kappa_exp(unsigned n, double t);

/// (1/n) E Tr exp(t S) for S a sum of K i.i.d. GUE(n) matrices, by quadrature
/// of e^{tx} against the one-eigenvalue density of S.
double expected_exp_sum(unsigned n, unsigned K, double t);

/// alpha_n = F(1-n, 2; -1/2)^2 / F(1-n, 2; -1), exactly.
Rational alpha_ratio(unsigned n);

/// Table of (n, ln alpha_n) for n = 2..n_max, logs taken in 50-digit
/// arithmetic from the exact fractions.
RealFunctionTable ln_alpha_scan(unsigned n_max);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Ordinary least-squares line through the table rows with lo <= x <= hi.
/// Needs at least two such rows.
LinearFit least_squares_fit(const RealFunctionTable& table, double lo, double hi);

struct GtTraces {
  double exp_of_sum = 0.0;      // Tr e^{X+Y}
  double product_of_exps = 0.0; // Tr e^X e^Y
};

GtTraces golden_thompson_traces(const HermitianMatrix& x, const HermitianMatrix& y);

struct GtReport {
  unsigned n = 0;
  std::size_t samples = 0;
  double empirical_ratio = 0.0;
  double std_error = 0.0;
  double analytic_ratio = 0.0;
  /// Draws with Tr e^{X+Y} > Tr e^X e^Y (1 + 1e-9).
  std::size_t violations = 0;

  /// {"n":..,"samples":..,"empirical_ratio":..,"stderr":..,"analytic_ratio":..,"violations":..}
  std::string to_json() const;
};

/// Monte Carlo estimate of E Tr e^X e^Y / E Tr e^{X+Y} over independent
/// GUE(n) pairs. Draw i uses stream.substream(i).
GtReport gt_empirical(unsigned n, std::size_t samples, const RandomStream& stream,
                      unsigned workers = 1);

struct ExpMeanEstimate {
  MeanEstimate normalized_trace;  // (1/n) Tr e^{tH}
  MeanEstimate offdiag_real;      // Re (e^{tH})_{12}
  MeanEstimate offdiag_imag;      // Im (e^{tH})_{12}
};

/// Monte Carlo average of e^{tH} over H ~ GUE(n), n >= 2.
ExpMeanEstimate monte_carlo_exp_mean(unsigned n, double t, std::size_t samples,
                                     const RandomStream& stream, unsigned workers = 1);

}  // namespace hornrmt

#endif  // HORNRMT_GOLDEN_THOMPSON_HPP
