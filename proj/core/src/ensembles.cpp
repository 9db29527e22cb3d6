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

#include "hornrmt/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hornrmt/error.hpp"
#include "hornrmt/quadrature.hpp"

namespace hornrmt {

void GueParams::validate() const {
  detail::require(dim >= 1, "GUE dimension n must be at least 1");
  detail::require(summand_count >= 1, "GUE summand count K must be at least 1");
}

void WishartParams::validate() const {
  detail::require(rows >= 1 && cols >= 1, "Wishart dimensions m, n must be positive");
  detail::require(summand_count >= 1, "Wishart summand count K must be at least 1");
  if (rows > cols) {
    std::ostringstream os;
    os << "Wishart requires m <= n, got m = " << rows << ", n = " << cols;
    throw DomainError(os.str());
  }
}

HermitianMatrix sample_gue(unsigned n, RandomStream& stream) {
  detail::require(n >= 1, "sample_gue: n must be at least 1");
  const auto dim = static_cast<Eigen::Index>(n);
  ComplexMatrix z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = stream.complex_gaussian();
  // symmetrized() stores (Z + Z^dagger)/2 exactly.
  return HermitianMatrix::symmetrized(z);
}

HermitianMatrix sample_gue_sum(const GueParams& params, RandomStream& stream) {
  params.validate();
  HermitianMatrix s = sample_gue(params.dim, stream);
  for (unsigned k = 1; k < params.summand_count; ++k) s = s + sample_gue(params.dim, stream);
  return s;
}

HermitianMatrix sample_wishart(unsigned m, unsigned n, RandomStream& stream) {
  WishartParams{m, n, 1}.validate();
  ComplexMatrix z(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < z.cols(); ++j)
    for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = stream.complex_gaussian();
  return HermitianMatrix::symmetrized(z * z.adjoint());
}

HermitianMatrix sample_wishart_sum(const WishartParams& params, RandomStream& stream) {
  params.validate();
  HermitianMatrix w = sample_wishart(params.rows, params.cols, stream);
  for (unsigned k = 1; k < params.summand_count; ++k)
    w = w + sample_wishart(params.rows, params.cols, stream);
  return w;
}

HermitianMatrix sample_orbit_sum(const Spectrum& a, const Spectrum& b, RandomStream& stream) {
  if (a.dim() != b.dim() || a.dim() == 0) {
    std::ostringstream os;
    os << "sample_orbit_sum: spectra must have equal positive dimension, got " << a.dim()
       << " and " << b.dim();
    throw DomainError(os.str());
  }
  const UnitaryMatrix u = sample_haar_unitary(a.dim(), stream);
  const UnitaryMatrix v = sample_haar_unitary(b.dim(), stream);
  return conjugate_orbit(a, u) + conjugate_orbit(b, v);
}

namespace {

double log_factorial(unsigned j) { return std::lgamma(static_cast<double>(j) + 1.0); }

double log_vandermonde_squared(std::span<const double> x, bool& zero) {
  double acc = 0.0;
  zero = false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double d = x[i] - x[j];
      if (d == 0.0) {
        zero = true;
        return 0.0;
      }
      acc += 2.0 * std::log(std::abs(d));
    }
  return acc;
}

}  // namespace

double gue_sum_eigen_pdf(unsigned n, unsigned K, std::span<const double> s) {
  GueParams{n, K}.validate();
  if (s.size() != n) {
    std::ostringstream os;
    os << "gue_sum_eigen_pdf: expected " << n << " arguments, got " << s.size();
    throw DomainError(os.str());
  }
  const double nd = n, kd = K;
  const double pairs = nd * (nd - 1.0) / 2.0;
  double log_norm = pairs * std::log(2.0 / kd) - 0.5 * nd * std::log(kd * std::numbers::pi);
  for (unsigned j = 1; j <= n; ++j) log_norm -= log_factorial(j);

  bool zero = false;
  const double log_delta2 = log_vandermonde_squared(s, zero);
  if (zero) return 0.0;
  double sq = 0.0;
  for (double v : s) sq += v * v;
  return std::exp(log_norm + log_delta2 - sq / kd);
}

double wishart_sum_eigen_pdf(unsigned m, unsigned n, unsigned K, std::span<const double> w) {
  WishartParams{m, n, K}.validate();
  if (w.size() != m) {
    std::ostringstream os;
    os << "wishart_sum_eigen_pdf: expected " << m << " arguments, got " << w.size();
    throw DomainError(os.str());
  }
  for (double v : w)
    if (v < 0.0) return 0.0;
  const double exponent = static_cast<double>(K) * n - m;
  double log_norm = 0.0;
  for (unsigned j = 1; j <= m; ++j)
    log_norm -= std::lgamma(exponent + j) + std::lgamma(1.0 + j);

  bool zero = false;
  const double log_delta2 = log_vandermonde_squared(w, zero);
  if (zero) return 0.0;
  double acc = 0.0;
  for (double v : w) {
    if (v == 0.0) {
      if (exponent > 0.0) return 0.0;
      continue;
    }
    acc += exponent * std::log(v) - v;
  }
  return std::exp(log_norm + log_delta2 + acc);
}

double gue_sum_gap_density(unsigned K, double gap) {
  GueParams{2, K}.validate();
  if (gap < 0.0) return 0.0;
  // c1 = (t + d)/2, c2 = (t - d)/2; dc1 dc2 = dt dd / 2; the ordered gap
  // collects both orderings, cancelling the 1/2.
  const double radius = 12.0 * std::sqrt(static_cast<double>(K)) + gap;
  auto integrand = [&](double t) {
    const double c[2] = {0.5 * (t + gap), 0.5 * (t - gap)};
    return gue_sum_eigen_pdf(2, K, c);
  };
  QuadratureOptions opts;
  opts.abs_tolerance = 1e-13;
  return integrate(integrand, -radius, radius, opts);
}

double wishart_sum_gap_density(unsigned n, unsigned K, double gap) {
  WishartParams{2, n, K}.validate();
  if (gap < 0.0) return 0.0;
  const double kn = static_cast<double>(K) * n;
  const double upper = gap + 4.0 * kn + 80.0;
  auto integrand = [&](double t) {
    const double w[2] = {0.5 * (t + gap), 0.5 * (t - gap)};
    return wishart_sum_eigen_pdf(2, n, K, w);
  };
  QuadratureOptions opts;
  opts.abs_tolerance = 1e-13;
  return integrate(integrand, gap, upper, opts);
}

}  // namespace hornrmt
