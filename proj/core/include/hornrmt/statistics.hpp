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


#ifndef HORNRMT_STATISTICS_HPP
#define HORNRMT_STATISTICS_HPP

#include <cstddef>
#include <span>

namespace hornrmt {

struct MeanEstimate {
  double mean = 0.0;
  /// Standard error of the mean; 0 for a single sample.
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Sample mean and its standard error. Sums run in index order, so the
/// result is reproducible. Throws DomainError for an empty sample.
MeanEstimate estimate_mean(std::span<const double> values);

/// Delta-method estimate of E[num] / E[den] from paired samples.
MeanEstimate estimate_ratio(std::span<const double> num, std::span<const double> den);

}  // namespace hornrmt

#endif  // HORNRMT_STATISTICS_HPP
