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

#ifndef HORNRMT_FUNCTION_TABLE_HPP
#define HORNRMT_FUNCTION_TABLE_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace hornrmt {

/// Sampled real function: strictly increasing abscissae with matching
/// ordinates.
class RealFunctionTable {
 public:
  RealFunctionTable() = default;
  RealFunctionTable(std::vector<double> abscissae, std::vector<double> ordinates);

  /// Evaluates f at `steps` evenly spaced points of [lo, hi] (endpoints
  /// included). Requires lo < hi and steps >= 2.
  static RealFunctionTable tabulate(const std::function<double(double)>& f, double lo, double hi,
                                    std::size_t steps);

  std::size_t size() const noexcept { return x_.size(); }
  const std::vector<double>& abscissae() const noexcept { return x_; }
  const std::vector<double>& ordinates() const noexcept { return y_; }

  /// Two-column CSV with header `x,value`, 17 significant digits.
  void write_csv(std::ostream& os) const;

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// %.17g rendering used by every CSV/JSON emitter in the project.
std::string format_double(double v);

}  // namespace hornrmt

#endif  // HORNRMT_FUNCTION_TABLE_HPP
