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


#ifndef HORNRMT_HARNESS_HPP
#define HORNRMT_HARNESS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hornrmt/matrix.hpp"
#include "hornrmt/random_stream.hpp"

namespace hornrmt {

/// Fixed-width histogram on [lo, hi] with out-of-range counters.
class Histogram {
 public:
  /// Requires lo < hi (finite) and bins >= 1.
  Histogram(double lo, double hi, std::size_t bins);

  /// Values equal to hi land in the last bin.
  void add(double x);
  /// Adds counts of a histogram with identical binning.
  void merge(const Histogram& other);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t bin_count() const noexcept { return counts_.size(); }
  double bin_width() const noexcept { return (hi_ - lo_) / static_cast<double>(counts_.size()); }
  double bin_lo(std::size_t k) const;
  double bin_hi(std::size_t k) const;
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  std::size_t underflow() const noexcept { return underflow_; }
  std::size_t overflow() const noexcept { return overflow_; }
  std::size_t total() const noexcept { return total_; }

  bool operator==(const Histogram&) const = default;

  /// `bin_lo,bin_hi,count,analytic_mass`; the last column is empty when no
  /// masses are given.
  void write_csv(std::ostream& os, std::span<const double> analytic_mass = {}) const;

 private:
  double lo_;
  double hi_;
  std::vector<std::size_t> counts_;
  std::size_t underflow_ = 0;
  std::size_t overflow_ = 0;
  std::size_t total_ = 0;
};

struct ComparisonReport {
  double ks_statistic = 0.0;
  double l1_distance = 0.0;
  std::size_t sample_count = 0;
  std::string density_id;

  std::string to_json() const;
};

/// Default KS acceptance threshold at 1e5 draws.
inline constexpr double kDefaultKsThreshold = 0.01;
inline constexpr std::size_t kDefaultBins = 200;

/// Analytic probability of each bin, integrating piecewise between the given
/// kinks of the density.
std::vector<double> bin_masses(const Histogram& h, const std::function<double(double)>& density,
                               std::span<const double> breakpoints = {});

/// KS distance between empirical and analytic CDFs at the bin edges, and the
/// L1 distance between bin probabilities. Throws DomainError for an empty
/// histogram or when the density has mass < 0.999 on the histogram range.
ComparisonReport compare_to_density(const Histogram& h,
                                    const std::function<double(double)>& density,
                                    std::string density_id = "",
                                    std::span<const double> breakpoints = {});

enum class ExperimentKind { OrbitSumGap, OrbitSumDiag, GueSum, WishartSum, EigenMix, DiagMix };

std::string to_string(ExperimentKind kind);
/// Accepts orbit-sum-gap, orbit-sum-diag, gue-sum, wishart-sum, eigen-mix, diag-mix.
ExperimentKind parse_experiment_kind(const std::string& name);

struct ExperimentParams {
  ExperimentKind kind = ExperimentKind::OrbitSumGap;
  /// orbit-sum-*: the two fixed spectra (dimension 2).
  Spectrum a{1.0, 0.0};
  Spectrum b{1.0, 0.0};
  /// gue-sum: dimension n, K summands. wishart-sum: m x n factors, K summands.
  unsigned n = 2;
  unsigned k = 1;
  unsigned m = 1;
  /// eigen-mix / diag-mix orbit parameters.
  double mu = 0.0;
  double nu = 0.0;
  std::size_t bins = kDefaultBins;
  unsigned workers = 1;
  /// Overrides the automatic histogram range.
  std::optional<std::pair<double, double>> range;
};

/// The density an experiment's histogram is compared against.
struct AnalyticDensity {
  std::function<double(double)> density;
  std::string id;
  /// Support (possibly truncated to a range carrying all but ~1e-12 mass).
  double support_lo = 0.0;
  double support_hi = 0.0;
  std::vector<double> breakpoints;
};

/// Throws DomainError for parameters the kind cannot compare (e.g. Wishart
/// with m > 2, degenerate orbits).
AnalyticDensity analytic_density(const ExperimentParams& params);

/// Histogram range: the analytic support padded by 10% of its width.
std::pair<double, double> default_range(const ExperimentParams& params);

/// Samples `samples` draws (draw i from stream.substream(i)) and bins the
/// observable: ordered gap, C11, pooled eigenvalues, gap / value, pooled
/// mixture eigenvalues, or the mixture's (2,2) entry.
Histogram run_experiment(const ExperimentParams& params, std::size_t samples,
                         const RandomStream& stream);

/// run_experiment followed by compare_to_density against analytic_density.
ComparisonReport verify_experiment(const ExperimentParams& params, std::size_t samples,
                                   const RandomStream& stream, Histogram* histogram_out = nullptr);

}  // namespace hornrmt

#endif  // HORNRMT_HARNESS_HPP
