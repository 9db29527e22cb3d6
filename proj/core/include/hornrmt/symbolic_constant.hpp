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


#ifndef HORNRMT_SYMBOLIC_CONSTANT_HPP
#define HORNRMT_SYMBOLIC_CONSTANT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hornrmt {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Exact constant of the form coeff * sqrt(radicand) * pi^(half_pi_power / 2)
/// with coeff rational and radicand a squarefree positive integer. The form is
/// canonical, so equality is structural.
class SymbolicConstant {
 public:
  SymbolicConstant() = default;
  SymbolicConstant(Rational coeff) : coeff_(std::move(coeff)) {}  // NOLINT(implicit)
  SymbolicConstant(Rational coeff, Integer radicand, int half_pi_power);

  /// sqrt(r) for a rational r >= 0.
  static SymbolicConstant sqrt_of(const Rational& r);
  /// r^(e/2) for a rational r > 0 and any integer e.
  static SymbolicConstant half_power(const Rational& r, int e);
  /// pi^(e/2).
  static SymbolicConstant pi_half_power(int e);

  const Rational& coeff() const noexcept { return coeff_; }
  const Integer& radicand() const noexcept { return radicand_; }
  int half_pi_power() const noexcept { return half_pi_power_; }
  bool is_zero() const { return coeff_ == 0; }

  SymbolicConstant operator*(const SymbolicConstant& o) const;
  SymbolicConstant operator/(const SymbolicConstant& o) const;
  SymbolicConstant operator-() const;
  bool operator==(const SymbolicConstant& o) const;

  double to_double() const;
  /// Irrational factors only, e.g. "sqrt(2) * pi^(-3/2)"; empty when both are 1.
  std::string irrational_string() const;
  /// e.g. "3/4 * sqrt(2) * pi^(-1)".
  std::string to_string() const;

 private:
  void canonicalize();

  Rational coeff_ = 1;
  Integer radicand_ = 1;
  int half_pi_power_ = 0;
};

}  // namespace hornrmt

#endif  // HORNRMT_SYMBOLIC_CONSTANT_HPP
