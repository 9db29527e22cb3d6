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

#include "hornrmt/function_table.hpp"

#include <cstdio>

#include "hornrmt/error.hpp"

namespace hornrmt {

RealFunctionTable::RealFunctionTable(std::vector<double> abscissae, std::vector<double> ordinates)
    : x_(std::move(abscissae)), y_(std::move(ordinates)) {
  detail::require(x_.size() == y_.size(), "RealFunctionTable: abscissae and ordinates differ in length");
  for (std::size_t i = 1; i < x_.size(); ++i)
    detail::require(x_[i] > x_[i - 1], "RealFunctionTable: abscissae must be strictly increasing");
}

RealFunctionTable RealFunctionTable::tabulate(const std::function<double(double)>& f, double lo,
                                              double hi, std::size_t steps) {
  detail::require(lo < hi, "RealFunctionTable::tabulate: need lo < hi");
  detail::require(steps >= 2, "RealFunctionTable::tabulate: need at least 2 points");
  std::vector<double> x(steps), y(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    x[i] = (i + 1 == steps) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    y[i] = f(x[i]);
  }
  return RealFunctionTable(std::move(x), std::move(y));
}

void RealFunctionTable::write_csv(std::ostream& os) const {
  os << "x,value\n";
  for (std::size_t i = 0; i < x_.size(); ++i)
    os << format_double(x_[i]) << ',' << format_double(y_[i]) << '\n';
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace hornrmt
