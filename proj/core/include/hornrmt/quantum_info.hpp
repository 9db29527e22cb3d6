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


#ifndef HORNRMT_QUANTUM_INFO_HPP
#define HORNRMT_QUANTUM_INFO_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "hornrmt/matrix.hpp"
#include "hornrmt/random_stream.hpp"
#include "hornrmt/statistics.hpp"

namespace hornrmt {

/// Pair of qubit orbits with spectra (1-mu, mu) and (1-nu, nu).
class OrbitParams {
 public:
  /// Throws DomainError unless 0 <= mu, nu < 1/2.
  OrbitParams(double mu, double nu);
  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }
  /// (1/2 - mu)(1/2 - nu).
  double denominator() const noexcept { return (0.5 - mu_) * (0.5 - nu_); }

 private:
  double mu_;
  double nu_;
};

struct Thresholds {
  double t0 = 0.0;  // (mu + nu)/2
  double t1 = 0.0;  // (1 - |mu - nu|)/2
};

Thresholds thresholds(const OrbitParams& p);

/// 2x2 density matrix: Hermitian, unit trace, positive semi-definite.
class DensityMatrix2 {
 public:
  /// Checks trace 1 within 1e-12 and eigenvalues >= -1e-12.
  explicit DensityMatrix2(HermitianMatrix rho);
  static DensityMatrix2 diagonal(double p0, double p1);

  const HermitianMatrix& matrix() const noexcept { return rho_; }
  Complex operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

 private:
  HermitianMatrix rho_;
};

/// Density of an eigenvalue of (U rho1 U^dagger + V rho2 V^dagger)/2, both
/// eigenvalues pooled: (1/2 - l)/D on [T0, T1] and (l - 1/2)/D on
/// [1 - T1, 1 - T0], D = (1/2 - mu)(1/2 - nu).
double eigen_mix_pdf(const OrbitParams& p, double lambda);

/// Density of the (2,2) entry of the same mixture: a trapezoid on
/// [T0, 1 - T0] with plateau (T1 - T0)/D on [T1, 1 - T1].
double diag_mix_pdf(const OrbitParams& p, double x);

/// (|x-T0| + |x-(1-T0)| - |x-T1| - |x-(1-T1)|) / (2D); equal to diag_mix_pdf.
double diag_mix_pdf_abs_form(const OrbitParams& p, double x);

/// F1(T0) + F1(1-T0) - F1(T1) - F1(1-T1).
double phi_integral(const OrbitParams& p);

/// Average quantum Jensen-Shannon divergence between the two orbits.
double qjsd_average(const OrbitParams& p);

/// Average relative-entropy coherence of the equal mixture.
double coherence_average(const OrbitParams& p);

/// int H2(l) p(l) dl - H2(mu)/2 - H2(nu)/2 by piecewise quadrature.
double qjsd_average_quadrature(const OrbitParams& p);

/// int H2(x) q(x) dx - int H2(l) p(l) dl by piecewise quadrature.
double coherence_average_quadrature(const OrbitParams& p);

double von_neumann_entropy(const DensityMatrix2& rho);
/// Tr rho (ln rho - ln sigma). Throws DomainError when supp rho is not
/// contained in supp sigma.
double relative_entropy(const DensityMatrix2& rho, const DensityMatrix2& sigma);
/// S(diag rho) - S(rho).
double coherence(const DensityMatrix2& rho);
/// (S(rho1 || m) + S(rho2 || m))/2 with m = (rho1 + rho2)/2.
double qjsd(const DensityMatrix2& rho1, const DensityMatrix2& rho2);

struct OrbitPairDraw {
  DensityMatrix2 rho1;
  DensityMatrix2 rho2;
  DensityMatrix2 mixture;
};

/// rho1 = U diag(1-mu, mu) U^dagger, rho2 = V diag(1-nu, nu) V^dagger with
/// independent Haar U, V, and their equal mixture.
OrbitPairDraw sample_orbit_pair(const OrbitParams& p, RandomStream& stream);

/// Monte Carlo mean of qjsd(rho1, rho2). Draw i uses stream.substream(i).
MeanEstimate qjsd_empirical(const OrbitParams& p, std::size_t samples,
                            const RandomStream& stream, unsigned workers = 1);

/// Monte Carlo mean of coherence((rho1 + rho2)/2).
MeanEstimate coherence_empirical(const OrbitParams& p, std::size_t samples,
                                 const RandomStream& stream, unsigned workers = 1);

/// Limits of the averages at the corners of [0, 1/2]^2, where an orbit
/// collapses to the maximally mixed state and the closed forms are 0/0.
struct CornerValue {
  double mu;
  double nu;
  double qjsd;
  double coherence;
};
std::vector<CornerValue> corner_values();

enum class SurfaceQuantity { Qjsd, Coherence };

struct SurfacePoint {
  double mu;
  double nu;
  double value;
};

/// Values on the grid mu, nu in {0.5 i / steps : i < steps}, mu-major.
std::vector<SurfacePoint> surface_values(SurfaceQuantity which, unsigned steps);

/// Writes `mu,nu,value` rows for mu = nu-grid 0.5 i / steps, i < steps.
void write_surface_csv(std::ostream& os, SurfaceQuantity which, unsigned steps);

}  // namespace hornrmt

#endif  // HORNRMT_QUANTUM_INFO_HPP
