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


#include "hornrmt/quantum_info.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "hornrmt/error.hpp"
#include "hornrmt/function_table.hpp"
#include "hornrmt/parallel.hpp"
#include "hornrmt/quadrature.hpp"
#include "hornrmt/special_functions.hpp"

namespace hornrmt {

OrbitParams::OrbitParams(double mu, double nu) : mu_(mu), nu_(nu) {
  auto check = [](double v, const char* name) {
    if (!(v >= 0.0 && v < 0.5)) {
      std::ostringstream os;
      os << "orbit parameter " << name << " = " << v << " must lie in [0, 1/2)";
      throw DomainError(os.str());
    }
  };
  check(mu, "mu");
  check(nu, "nu");
}

Thresholds thresholds(const OrbitParams& p) {
  return {0.5 * (p.mu() + p.nu()), 0.5 * (1.0 - std::abs(p.mu() - p.nu()))};
}

DensityMatrix2::DensityMatrix2(HermitianMatrix rho) : rho_(std::move(rho)) {
  detail::require(rho_.dim() == 2, "DensityMatrix2: matrix must be 2x2");
  const double tr = rho_.trace();
  if (!(std::abs(tr - 1.0) <= 1e-12)) {
    std::ostringstream os;
    os << "DensityMatrix2: trace " << tr << " differs from 1";
    throw DomainError(os.str());
  }
  const Spectrum s = eigenvalues(rho_);
  if (!(s[1] >= -1e-12)) {
    std::ostringstream os;
    os << "DensityMatrix2: negative eigenvalue " << s[1];
    throw DomainError(os.str());
  }
}

DensityMatrix2 DensityMatrix2::diagonal(double p0, double p1) {
  const std::array<double, 2> d{p0, p1};
  return DensityMatrix2(HermitianMatrix::diagonal(d));
}

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << what << ": argument " << x << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

std::array<double, 4> breakpoints(const Thresholds& t) {
  return {t.t0, t.t1, 1.0 - t.t1, 1.0 - t.t0};
}

double entropy_of(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs)
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

QuadratureOptions tight() {
  QuadratureOptions o;
  o.abs_tolerance = 1e-13;
  return o;
}

}  // namespace

double eigen_mix_pdf(const OrbitParams& p, double lambda) {
  require_unit_interval(lambda, "eigen_mix_pdf");
  const Thresholds t = thresholds(p);
  const double d = p.denominator();
  if (lambda >= t.t0 && lambda <= t.t1) return (0.5 - lambda) / d;
  if (lambda >= 1.0 - t.t1 && lambda <= 1.0 - t.t0) return (lambda - 0.5) / d;
  return 0.0;
}

double diag_mix_pdf(const OrbitParams& p, double x) {
  require_unit_interval(x, "diag_mix_pdf");
  const Thresholds t = thresholds(p);
  const double d = p.denominator();
  if (x < t.t0 || x > 1.0 - t.t0) return 0.0;
  if (x <= t.t1) return (x - t.t0) / d;
  if (x <= 1.0 - t.t1) return (t.t1 - t.t0) / d;
  return (1.0 - t.t0 - x) / d;
}

double diag_mix_pdf_abs_form(const OrbitParams& p, double x) {
  require_unit_interval(x, "diag_mix_pdf_abs_form");
  const Thresholds t = thresholds(p);
  const double s = std::abs(x - t.t0) + std::abs(x - (1.0 - t.t0)) - std::abs(x - t.t1) -
                   std::abs(x - (1.0 - t.t1));
  return s / (2.0 * p.denominator());
}

double phi_integral(const OrbitParams& p) {
  const Thresholds t = thresholds(p);
  return F1(t.t0) + F1(1.0 - t.t0) - F1(t.t1) - F1(1.0 - t.t1);
}

double qjsd_average(const OrbitParams& p) {
  return phi_integral(p) / p.denominator() - 0.5 * binary_entropy(p.mu()) -
         0.5 * binary_entropy(p.nu());
}

double coherence_average(const OrbitParams& p) {
  const Thresholds t = thresholds(p);
  return ((2.0 * t.t0 - 1.0) * F0(t.t0) - (2.0 * t.t1 - 1.0) * F0(t.t1) - 2.0 * phi_integral(p)) /
         p.denominator();
}

double qjsd_average_quadrature(const OrbitParams& p) {
  const auto bp = breakpoints(thresholds(p));
  const double mean_entropy = integrate_piecewise(
      [&](double l) { return binary_entropy(l) * eigen_mix_pdf(p, l); }, 0.0, 1.0, bp, tight());
  return mean_entropy - 0.5 * binary_entropy(p.mu()) - 0.5 * binary_entropy(p.nu());
}

double coherence_average_quadrature(const OrbitParams& p) {
  const auto bp = breakpoints(thresholds(p));
  const double diag = integrate_piecewise(
      [&](double x) { return binary_entropy(x) * diag_mix_pdf(p, x); }, 0.0, 1.0, bp, tight());
  const double eig = integrate_piecewise(
      [&](double l) { return binary_entropy(l) * eigen_mix_pdf(p, l); }, 0.0, 1.0, bp, tight());
  return diag - eig;
}

double von_neumann_entropy(const DensityMatrix2& rho) {
  const Spectrum s = eigenvalues(rho.matrix());
  return entropy_of(s.values());
}

double relative_entropy(const DensityMatrix2& rho, const DensityMatrix2& sigma) {
  const EigenDecomposition es = eigh(sigma.matrix());
  const ComplexMatrix& v = es.vectors.matrix();
  double cross = 0.0;  // Tr rho ln sigma
  for (Eigen::Index k = 0; k < 2; ++k) {
    const double weight = (v.col(k).adjoint() * rho.matrix().matrix() * v.col(k))(0, 0).real();
    const double s = es.spectrum[static_cast<std::size_t>(k)];
    if (s <= 1e-15) {
      if (weight > 1e-12) {
        std::ostringstream os;
        os << "relative_entropy: support of rho is not contained in support of sigma (weight "
           << weight << " on a null direction)";
        throw DomainError(os.str());
      }
      continue;
    }
    cross += weight * std::log(s);
  }
  return -von_neumann_entropy(rho) - cross;
}

double coherence(const DensityMatrix2& rho) {
  const std::array<double, 2> diag{rho(0, 0).real(), rho(1, 1).real()};
  return entropy_of(diag) - von_neumann_entropy(rho);
}

double qjsd(const DensityMatrix2& rho1, const DensityMatrix2& rho2) {
  const DensityMatrix2 mix((rho1.matrix() + rho2.matrix()) * 0.5);
  return 0.5 * (relative_entropy(rho1, mix) + relative_entropy(rho2, mix));
}

OrbitPairDraw sample_orbit_pair(const OrbitParams& p, RandomStream& stream) {
  const Spectrum s1{1.0 - p.mu(), p.mu()};
  const Spectrum s2{1.0 - p.nu(), p.nu()};
  const UnitaryMatrix u = sample_haar_unitary(2, stream);
  const UnitaryMatrix v = sample_haar_unitary(2, stream);
  const HermitianMatrix r1 = conjugate_orbit(s1, u);
  const HermitianMatrix r2 = conjugate_orbit(s2, v);
  return {DensityMatrix2(r1), DensityMatrix2(r2), DensityMatrix2((r1 + r2) * 0.5)};
}

MeanEstimate qjsd_empirical(const OrbitParams& p, std::size_t samples,
                            const RandomStream& stream, unsigned workers) {
  detail::require(samples >= 1, "qjsd_empirical: samples must be at least 1");
  const auto values = parallel_map<double>(samples, workers, [&](std::size_t i) {
    RandomStream s = stream.substream(i);
    const OrbitPairDraw d = sample_orbit_pair(p, s);
    return qjsd(d.rho1, d.rho2);
  });
  return estimate_mean(values);
}

MeanEstimate coherence_empirical(const OrbitParams& p, std::size_t samples,
                                 const RandomStream& stream, unsigned workers) {
  detail::require(samples >= 1, "coherence_empirical: samples must be at least 1");
  const auto values = parallel_map<double>(samples, workers, [&](std::size_t i) {
    RandomStream s = stream.substream(i);
    return coherence(sample_orbit_pair(p, s).mixture);
  });
  return estimate_mean(values);
}

std::vector<CornerValue> corner_values() {
  const double ln2 = std::log(2.0), ln3 = std::log(3.0), ln34 = std::log(0.75);
  return {
      {0.0, 0.0, ln2 / 3.0 + 1.0 / 6.0, 2.0 / 3.0 * (1.0 - ln2)},
      {0.0, 0.5, -0.75 * ln34, 0.5 - 0.375 * ln3},
      {0.5, 0.0, -0.75 * ln34, 0.5 - 0.375 * ln3},
      {0.5, 0.5, 0.0, 0.0},
  };
}

std::vector<SurfacePoint> surface_values(SurfaceQuantity which, unsigned steps) {
  detail::require(steps >= 1, "surface_values: steps must be at least 1");
  std::vector<SurfacePoint> out;
  out.reserve(static_cast<std::size_t>(steps) * steps);
  for (unsigned i = 0; i < steps; ++i) {
    for (unsigned j = 0; j < steps; ++j) {
      const double mu = 0.5 * i / steps, nu = 0.5 * j / steps;
      const OrbitParams p(mu, nu);
      out.push_back({mu, nu, which == SurfaceQuantity::Qjsd ? qjsd_average(p) : coherence_average(p)});
    }
  }
  return out;
}

void write_surface_csv(std::ostream& os, SurfaceQuantity which, unsigned steps) {
  os << "mu,nu,value\n";
  for (const SurfacePoint& pt : surface_values(which, steps))
    os << format_double(pt.mu) << "," << format_double(pt.nu) << "," << format_double(pt.value)
       << "\n";
}

}  // namespace hornrmt
