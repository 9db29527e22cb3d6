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


#include "hornrmt/statistics.hpp"

#include <cmath>

#include "hornrmt/error.hpp"

namespace hornrmt {

MeanEstimate estimate_mean(std::span<const double> values) {
  detail::require(!values.empty(), "estimate_mean: empty sample");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  MeanEstimate out;
  out.mean = mean;
  out.samples = values.size();
  out.std_error = values.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  return out;
}

MeanEstimate estimate_ratio(std::span<const double> num, std::span<const double> den) {
  detail::require(!num.empty(), "estimate_ratio: empty sample");
  detail::require(num.size() == den.size(), "estimate_ratio: sample length mismatch");
  const double n = static_cast<double>(num.size());
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    sa += num[i];
    sb += den[i];
  }
  const double ma = sa / n, mb = sb / n;
  if (mb == 0.0) throw NumericalError("estimate_ratio: denominator mean is zero");
  const double r = ma / mb;
  // Residuals a - r b have mean zero; their variance over (n mb^2) is the
  // delta-method variance of the ratio.
  double ss = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const double e = num[i] - r * den[i];
    ss += e * e;
  }
  MeanEstimate out;
  out.mean = r;
  out.samples = num.size();
  out.std_error = num.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) / std::abs(mb) : 0.0;
  return out;
}

}  // namespace hornrmt
