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


#include "hornrmt/golden_thompson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hornrmt/ensembles.hpp"
#include "hornrmt/error.hpp"
#include "hornrmt/parallel.hpp"
#include "hornrmt/quadrature.hpp"
#include "hornrmt/special_functions.hpp"

namespace hornrmt {

namespace {

// Coarse pass for the scale int |f|, then a pass with a tolerance relative
// to that scale.
double integrate_relative(const std::function<double(double)>& f, double lo, double hi) {
  QuadratureOptions coarse;
  coarse.abs_tolerance = 0.0;
  coarse.max_intervals = 4096;
  const double scale =
      adaptive_simpson([&f](double x) { return std::abs(f(x)); }, lo, hi, coarse).value;
  QuadratureOptions fine;
  fine.abs_tolerance = std::max(1e-300, 1e-13 * scale);
  return integrate(f, lo, hi, fine);
}

}  // namespace

double expected_matrix_function_gue(unsigned n, const std::function<double(double)>& f,
                                    double growth) {
  detail::require(n >= 1, "expected_matrix_function_gue: n must be at least 1");
  const double radius = std::max(8.0, std::abs(growth) + 8.0 * std::sqrt(static_cast<double>(n)));
  auto integrand = [&](double x) { return f(x) * single_eigenvalue_density(n, x); };
  return integrate_relative(integrand, -radius, radius);
}

double kappa_exp(unsigned n, double t) {
  detail::require(n >= 1, "kappa_exp: n must be at least 1");
  return std::exp(0.25 * t * t) * confluent_F(1.0 - n, 2.0, -0.5 * t * t);
}

double expected_exp_sum(unsigned n, unsigned K, double t) {
  detail::require(n >= 1 && K >= 1, "expected_exp_sum: n and K must be positive");
  const double kd = K;
  const double radius =
      std::max(8.0, std::abs(t) * kd + 8.0 * std::sqrt(static_cast<double>(n) * kd));
  auto integrand = [&](double x) {
    return std::exp(t * x) * single_eigenvalue_density_sum(n, K, x);
  };
  return integrate_relative(integrand, -radius, radius);
}

Rational alpha_ratio(unsigned n) {
  detail::require(n >= 1, "alpha_ratio: n must be at least 1");
  const int a = 1 - static_cast<int>(n);
  const Rational half = confluent_F_terminating<Rational>(a, Rational(2), Rational(-1, 2));
  const Rational one = confluent_F_terminating<Rational>(a, Rational(2), Rational(-1));
  return half * half / one;
}

RealFunctionTable ln_alpha_scan(unsigned n_max) {
  detail::require(n_max >= 2, "ln_alpha_scan: n_max must be at least 2");
  using Float50 = boost::multiprecision::cpp_bin_float_50;
  std::vector<double> xs, ys;
  for (unsigned n = 2; n <= n_max; ++n) {
    const Rational r = alpha_ratio(n);
    const Float50 num(boost::multiprecision::numerator(r));
    const Float50 den(boost::multiprecision::denominator(r));
    xs.push_back(n);
    ys.push_back(static_cast<double>(log(num) - log(den)));
  }
  return RealFunctionTable(std::move(xs), std::move(ys));
}

LinearFit least_squares_fit(const RealFunctionTable& table, double lo, double hi) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  const auto& xs = table.abscissae();
  const auto& ys = table.ordinates();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < lo || xs[i] > hi) continue;
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    ++m;
  }
  if (m < 2) {
    std::ostringstream os;
    os << "least_squares_fit: need at least two rows in [" << lo << ", " << hi << "], found " << m;
    throw DomainError(os.str());
  }
  const double md = static_cast<double>(m);
  const double denom = md * sxx - sx * sx;
  LinearFit fit;
  fit.slope = (md * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / md;
  fit.points = m;
  return fit;
}

GtTraces golden_thompson_traces(const HermitianMatrix& x, const HermitianMatrix& y) {
  const HermitianMatrix ex = matrix_exp(x);
  const HermitianMatrix ey = matrix_exp(y);
  GtTraces out;
  out.exp_of_sum = matrix_exp(x + y).trace();
  out.product_of_exps = (ex.matrix() * ey.matrix()).trace().real();
  return out;
}

std::string GtReport::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"samples\":" << samples
     << ",\"empirical_ratio\":" << format_double(empirical_ratio)
     << ",\"stderr\":" << format_double(std_error)
     << ",\"analytic_ratio\":" << format_double(analytic_ratio)
     << ",\"violations\":" << violations << "}";
  return os.str();
}

GtReport gt_empirical(unsigned n, std::size_t samples, const RandomStream& stream,
                      unsigned workers) {
  detail::require(n >= 1, "gt_empirical: n must be at least 1");
  detail::require(samples >= 1, "gt_empirical: samples must be at least 1");
  const auto traces = parallel_map<GtTraces>(samples, workers, [&](std::size_t i) {
    RandomStream s = stream.substream(i);
    const HermitianMatrix x = sample_gue(n, s);
    const HermitianMatrix y = sample_gue(n, s);
    return golden_thompson_traces(x, y);
  });
  std::vector<double> num(samples), den(samples);
  GtReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    num[i] = traces[i].product_of_exps;
    den[i] = traces[i].exp_of_sum;
    if (den[i] > num[i] * (1.0 + 1e-9)) ++report.violations;
  }
  const MeanEstimate ratio = estimate_ratio(num, den);
  report.n = n;
  report.samples = samples;
  report.empirical_ratio = ratio.mean;
  report.std_error = ratio.std_error;
  report.analytic_ratio = static_cast<double>(alpha_ratio(n));
  return report;
}

ExpMeanEstimate monte_carlo_exp_mean(unsigned n, double t, std::size_t samples,
                                     const RandomStream& stream, unsigned workers) {
  detail::require(n >= 2, "monte_carlo_exp_mean: n must be at least 2");
  detail::require(samples >= 1, "monte_carlo_exp_mean: samples must be at least 1");
  const auto draws = parallel_map<std::array<double, 3>>(samples, workers, [&](std::size_t i) {
    RandomStream s = stream.substream(i);
    const HermitianMatrix e = matrix_exp(sample_gue(n, s) * t);
    return std::array<double, 3>{e.trace() / n, e(0, 1).real(), e(0, 1).imag()};
  });
  std::array<std::vector<double>, 3> cols;
  for (auto& c : cols) c.resize(samples);
  for (std::size_t i = 0; i < samples; ++i)
    for (std::size_t k = 0; k < 3; ++k) cols[k][i] = draws[i][k];
  return {estimate_mean(cols[0]), estimate_mean(cols[1]), estimate_mean(cols[2])};
}

}  // namespace hornrmt
