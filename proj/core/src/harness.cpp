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


#include "hornrmt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hornrmt/ensembles.hpp"
#include "hornrmt/error.hpp"
#include "hornrmt/function_table.hpp"
#include "hornrmt/horn.hpp"
#include "hornrmt/parallel.hpp"
#include "hornrmt/quadrature.hpp"
#include "hornrmt/quantum_info.hpp"
#include "hornrmt/special_functions.hpp"

namespace hornrmt {

Histogram::Histogram(double lo, double hi, std::size_t bins) : lo_(lo), hi_(hi), counts_(bins, 0) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    std::ostringstream os;
    os << "Histogram: invalid range [" << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }
  detail::require(bins >= 1, "Histogram: bin count must be at least 1");
}

void Histogram::add(double x) {
  ++total_;
  if (x < lo_) {
    ++underflow_;
    return;
  }
  if (x > hi_ || std::isnan(x)) {
    ++overflow_;
    return;
  }
  auto k = static_cast<std::size_t>((x - lo_) / bin_width());
  if (k >= counts_.size()) k = counts_.size() - 1;
  ++counts_[k];
}

void Histogram::merge(const Histogram& other) {
  if (other.lo_ != lo_ || other.hi_ != hi_ || other.counts_.size() != counts_.size())
    throw DomainError("Histogram::merge: binning differs");
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
  underflow_ += other.underflow_;
  overflow_ += other.overflow_;
  total_ += other.total_;
}

double Histogram::bin_lo(std::size_t k) const {
  return lo_ + (hi_ - lo_) * static_cast<double>(k) / static_cast<double>(counts_.size());
}

double Histogram::bin_hi(std::size_t k) const {
  return k + 1 == counts_.size() ? hi_ : bin_lo(k + 1);
}

void Histogram::write_csv(std::ostream& os, std::span<const double> analytic_mass) const {
  os << "bin_lo,bin_hi,count,analytic_mass\n";
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    os << format_double(bin_lo(k)) << "," << format_double(bin_hi(k)) << "," << counts_[k] << ",";
    if (k < analytic_mass.size()) os << format_double(analytic_mass[k]);
    os << "\n";
  }
}

std::string ComparisonReport::to_json() const {
  std::ostringstream os;
  os << "{\"density_id\":\"" << density_id << "\",\"sample_count\":" << sample_count
     << ",\"ks_statistic\":" << format_double(ks_statistic)
     << ",\"l1_distance\":" << format_double(l1_distance) << "}";
  return os.str();
}

std::vector<double> bin_masses(const Histogram& h, const std::function<double(double)>& density,
                               std::span<const double> breakpoints) {
  QuadratureOptions opts;
  opts.initial_panels = 2;
  opts.abs_tolerance = 1e-10 / static_cast<double>(h.bin_count());
  std::vector<double> masses(h.bin_count());
  for (std::size_t k = 0; k < h.bin_count(); ++k)
    masses[k] = integrate_piecewise(density, h.bin_lo(k), h.bin_hi(k), breakpoints, opts);
  return masses;
}

ComparisonReport compare_to_density(const Histogram& h,
                                    const std::function<double(double)>& density,
                                    std::string density_id, std::span<const double> breakpoints) {
  if (h.total() == 0) throw DomainError("compare_to_density: histogram is empty");
  const std::vector<double> masses = bin_masses(h, density, breakpoints);
  double mass = 0.0;
  for (double m : masses) mass += m;
  if (!(mass >= 0.999)) {
    std::ostringstream os;
    os << "compare_to_density: analytic mass on [" << h.lo() << ", " << h.hi() << "] is " << mass
       << " < 0.999; the histogram range is too small";
    throw DomainError(os.str());
  }
  const double n = static_cast<double>(h.total());
  double emp_cdf = static_cast<double>(h.underflow()) / n;
  double ana_cdf = 0.0;
  double ks = std::abs(emp_cdf - ana_cdf);
  double l1 = 0.0;
  for (std::size_t k = 0; k < h.bin_count(); ++k) {
    const double p = static_cast<double>(h.counts()[k]) / n;
    emp_cdf += p;
    ana_cdf += masses[k];
    ks = std::max(ks, std::abs(emp_cdf - ana_cdf));
    l1 += std::abs(p - masses[k]);
  }
  const double outside = static_cast<double>(h.underflow() + h.overflow()) / n;
  l1 += std::abs(outside - std::max(0.0, 1.0 - mass));
  ComparisonReport report;
  report.ks_statistic = std::min(1.0, ks);
  report.l1_distance = l1;
  report.sample_count = h.total();
  report.density_id = std::move(density_id);
  return report;
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::OrbitSumGap: return "orbit-sum-gap";
    case ExperimentKind::OrbitSumDiag: return "orbit-sum-diag";
    case ExperimentKind::GueSum: return "gue-sum";
    case ExperimentKind::WishartSum: return "wishart-sum";
    case ExperimentKind::EigenMix: return "eigen-mix";
    case ExperimentKind::DiagMix: return "diag-mix";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (ExperimentKind k : {ExperimentKind::OrbitSumGap, ExperimentKind::OrbitSumDiag,
                           ExperimentKind::GueSum, ExperimentKind::WishartSum,
                           ExperimentKind::EigenMix, ExperimentKind::DiagMix})
    if (to_string(k) == name) return k;
  throw DomainError("unknown experiment kind '" + name + "'");
}

namespace {

double gamma_density(double shape, double x) {
  if (x <= 0.0) return 0.0;
  return std::exp((shape - 1.0) * std::log(x) - x - std::lgamma(shape));
}

std::function<double(double)> clamp_to_unit(std::function<double(double)> f) {
  return [f = std::move(f)](double x) { return x < 0.0 || x > 1.0 ? 0.0 : f(x); };
}

std::string spectrum_id(const Spectrum& s) {
  std::ostringstream os;
  os << "(" << format_double(s[0]) << "," << format_double(s[1]) << ")";
  return os.str();
}

}  // namespace

AnalyticDensity analytic_density(const ExperimentParams& params) {
  AnalyticDensity out;
  std::ostringstream id;
  id << to_string(params.kind);
  switch (params.kind) {
    case ExperimentKind::OrbitSumGap: {
      const SpectrumPair2 pair(params.a, params.b);
      (void)eigen_gap_pdf_2x2(pair, 0.0);  // rejects degenerate orbits
      const GapInterval gi = gap_interval(pair);
      out.density = [pair](double d) { return eigen_gap_pdf_2x2(pair, d); };
      out.support_lo = gi.low;
      out.support_hi = gi.high;
      out.breakpoints = {gi.low, gi.high};
      id << " a=" << spectrum_id(params.a) << " b=" << spectrum_id(params.b);
      break;
    }
    case ExperimentKind::OrbitSumDiag: {
      const SpectrumPair2 pair(params.a, params.b);
      const double tr = pair.trace();
      (void)diag_pdf_2x2(pair, 0.5 * tr, tr);
      const double s = pair.alpha() + pair.beta();
      const double g = std::abs(pair.alpha() - pair.beta());
      out.density = [pair, tr](double c11) { return diag_pdf_2x2(pair, c11, tr); };
      out.support_lo = 0.5 * (tr - s);
      out.support_hi = 0.5 * (tr + s);
      out.breakpoints = {0.5 * (tr - s), 0.5 * (tr - g), 0.5 * (tr + g), 0.5 * (tr + s)};
      id << " a=" << spectrum_id(params.a) << " b=" << spectrum_id(params.b);
      break;
    }
    case ExperimentKind::GueSum: {
      GueParams{params.n, params.k}.validate();
      const unsigned n = params.n, k = params.k;
      const double rk = std::sqrt(static_cast<double>(k));
      if (n == 2) {
        out.density = [k](double d) { return gue_sum_gap_density(k, d); };
        out.support_lo = 0.0;
        out.support_hi = 8.0 * rk;
        id << " gap n=2 k=" << k;
      } else {
        out.density = [n, k](double x) { return single_eigenvalue_density_sum(n, k, x); };
        const double r = rk * (std::sqrt(2.0 * n) + 6.0);
        out.support_lo = -r;
        out.support_hi = r;
        id << " eigenvalue n=" << n << " k=" << k;
      }
      break;
    }
    case ExperimentKind::WishartSum: {
      WishartParams{params.m, params.n, params.k}.validate();
      const unsigned m = params.m, n = params.n, k = params.k;
      const double kn = static_cast<double>(k) * n;
      if (m == 1) {
        out.density = [kn](double x) { return gamma_density(kn, x); };
        out.support_hi = kn + 12.0 * std::sqrt(kn) + 20.0;
        id << " value m=1 n=" << n << " k=" << k;
      } else if (m == 2) {
        out.density = [n, k](double d) { return wishart_sum_gap_density(n, k, d); };
        out.support_hi = 2.0 * kn + 16.0 * std::sqrt(kn) + 24.0;
        id << " gap m=2 n=" << n << " k=" << k;
      } else {
        throw DomainError("wishart-sum comparison supports m <= 2 (one-dimensional marginal)");
      }
      out.support_lo = 0.0;
      break;
    }
    case ExperimentKind::EigenMix:
    case ExperimentKind::DiagMix: {
      const OrbitParams p(params.mu, params.nu);
      const Thresholds t = thresholds(p);
      if (params.kind == ExperimentKind::EigenMix)
        out.density = clamp_to_unit([p](double l) { return eigen_mix_pdf(p, l); });
      else
        out.density = clamp_to_unit([p](double x) { return diag_mix_pdf(p, x); });
      out.support_lo = t.t0;
      out.support_hi = 1.0 - t.t0;
      out.breakpoints = {t.t0, t.t1, 1.0 - t.t1, 1.0 - t.t0};
      id << " mu=" << format_double(params.mu) << " nu=" << format_double(params.nu);
      break;
    }
  }
  out.id = id.str();
  return out;
}

std::pair<double, double> default_range(const ExperimentParams& params) {
  if (params.range) return *params.range;
  const AnalyticDensity a = analytic_density(params);
  const double pad = 0.1 * (a.support_hi - a.support_lo);
  double lo = a.support_lo - pad, hi = a.support_hi + pad;
  const bool nonnegative = params.kind == ExperimentKind::OrbitSumGap ||
                           (params.kind == ExperimentKind::GueSum && params.n == 2) ||
                           params.kind == ExperimentKind::WishartSum;
  if (nonnegative) lo = std::max(lo, 0.0);
  if (params.kind == ExperimentKind::EigenMix || params.kind == ExperimentKind::DiagMix) {
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
  }
  return {lo, hi};
}

namespace {

std::vector<double> draw_observables(const ExperimentParams& params, RandomStream& s) {
  switch (params.kind) {
    case ExperimentKind::OrbitSumGap: {
      const Spectrum c = eigenvalues(sample_orbit_sum(params.a, params.b, s));
      return {c[0] - c[1]};
    }
    case ExperimentKind::OrbitSumDiag:
      return {sample_orbit_sum(params.a, params.b, s)(0, 0).real()};
    case ExperimentKind::GueSum: {
      const Spectrum c = eigenvalues(sample_gue_sum(GueParams{params.n, params.k}, s));
      if (params.n == 2) return {c[0] - c[1]};
      return {c.values().begin(), c.values().end()};
    }
    case ExperimentKind::WishartSum: {
      const HermitianMatrix w =
          sample_wishart_sum(WishartParams{params.m, params.n, params.k}, s);
      if (params.m == 1) return {w(0, 0).real()};
      const Spectrum c = eigenvalues(w);
      return {c[0] - c[1]};
    }
    case ExperimentKind::EigenMix: {
      const OrbitPairDraw d = sample_orbit_pair(OrbitParams(params.mu, params.nu), s);
      const Spectrum c = eigenvalues(d.mixture.matrix());
      return {c[0], c[1]};
    }
    case ExperimentKind::DiagMix: {
      const OrbitPairDraw d = sample_orbit_pair(OrbitParams(params.mu, params.nu), s);
      return {d.mixture(1, 1).real()};
    }
  }
  return {};
}

}  // namespace

Histogram run_experiment(const ExperimentParams& params, std::size_t samples,
                         const RandomStream& stream) {
  detail::require(samples >= 1, "run_experiment: samples must be at least 1");
  const auto [lo, hi] = default_range(params);
  Histogram h(lo, hi, params.bins);
  const auto values =
      parallel_map<std::vector<double>>(samples, params.workers, [&](std::size_t i) {
        RandomStream s = stream.substream(i);
        return draw_observables(params, s);
      });
  for (const auto& row : values)
    for (double v : row) h.add(v);
  return h;
}

ComparisonReport verify_experiment(const ExperimentParams& params, std::size_t samples,
                                   const RandomStream& stream, Histogram* histogram_out) {
  const AnalyticDensity a = analytic_density(params);
  Histogram h = run_experiment(params, samples, stream);
  ComparisonReport r = compare_to_density(h, a.density, a.id, a.breakpoints);
  if (histogram_out) *histogram_out = std::move(h);
  return r;
}

}  // namespace hornrmt
