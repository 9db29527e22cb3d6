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


#include "hornrmt/symbolic_constant.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hornrmt/error.hpp"

namespace hornrmt {

namespace {

// Splits n = s^2 * f with f squarefree; returns {s, f}.
std::pair<Integer, Integer> square_split(Integer n) {
  Integer square = 1, free = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      square *= p;
    }
    if (n % p == 0) {
      n /= p;
      free *= p;
    }
  }
  free *= n;
  return {square, free};
}

Rational rational_pow(const Rational& r, int e) {
  Rational out = 1;
  const Rational base = e >= 0 ? r : Rational(1) / r;
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return out;
}

}  // namespace

SymbolicConstant::SymbolicConstant(Rational coeff, Integer radicand, int half_pi_power)
    : coeff_(std::move(coeff)), radicand_(std::move(radicand)), half_pi_power_(half_pi_power) {
  if (radicand_ <= 0) throw DomainError("SymbolicConstant: radicand must be positive");
  canonicalize();
}

void SymbolicConstant::canonicalize() {
  if (coeff_ == 0) {
    radicand_ = 1;
    half_pi_power_ = 0;
    return;
  }
  auto [s, f] = square_split(radicand_);
  coeff_ *= Rational(s);
  radicand_ = f;
}

SymbolicConstant SymbolicConstant::sqrt_of(const Rational& r) {
  if (r < 0) throw DomainError("SymbolicConstant::sqrt_of: negative argument");
  if (r == 0) return SymbolicConstant(Rational(0));
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  // sqrt(p/q) = sqrt(p q) / q
  return SymbolicConstant(Rational(1, den), num * den, 0);
}

SymbolicConstant SymbolicConstant::half_power(const Rational& r, int e) {
  if (r <= 0) throw DomainError("SymbolicConstant::half_power: base must be positive");
  if (e % 2 == 0) return SymbolicConstant(rational_pow(r, e / 2));
  const int whole = (e - 1) / 2;  // e odd: e = 2 whole + 1
  return SymbolicConstant(rational_pow(r, whole)) * sqrt_of(r);
}

SymbolicConstant SymbolicConstant::pi_half_power(int e) { return SymbolicConstant(1, 1, e); }

SymbolicConstant SymbolicConstant::operator*(const SymbolicConstant& o) const {
  SymbolicConstant out;
  out.coeff_ = coeff_ * o.coeff_;
  out.radicand_ = radicand_ * o.radicand_;
  out.half_pi_power_ = half_pi_power_ + o.half_pi_power_;
  out.canonicalize();
  return out;
}

SymbolicConstant SymbolicConstant::operator/(const SymbolicConstant& o) const {
  if (o.is_zero()) throw DomainError("SymbolicConstant: division by zero");
  // 1/sqrt(f) = sqrt(f)/f
  SymbolicConstant inv;
  inv.coeff_ = Rational(1) / (o.coeff_ * Rational(o.radicand_));
  inv.radicand_ = o.radicand_;
  inv.half_pi_power_ = -o.half_pi_power_;
  return *this * inv;
}

SymbolicConstant SymbolicConstant::operator-() const {
  SymbolicConstant out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

bool SymbolicConstant::operator==(const SymbolicConstant& o) const {
  return coeff_ == o.coeff_ && radicand_ == o.radicand_ && half_pi_power_ == o.half_pi_power_;
}

double SymbolicConstant::to_double() const {
  return static_cast<double>(coeff_) * std::sqrt(static_cast<double>(radicand_)) *
         std::pow(std::numbers::pi, 0.5 * half_pi_power_);
}

std::string SymbolicConstant::irrational_string() const {
  std::ostringstream os;
  if (radicand_ != 1) os << "sqrt(" << radicand_ << ")";
  if (half_pi_power_ != 0) {
    if (radicand_ != 1) os << " * ";
    os << "pi";
    if (half_pi_power_ % 2 == 0) {
      if (half_pi_power_ != 2) os << "^(" << half_pi_power_ / 2 << ")";
    } else {
      os << "^(" << half_pi_power_ << "/2)";
    }
  }
  return os.str();
}

std::string SymbolicConstant::to_string() const {
  const std::string irr = irrational_string();
  std::string out = coeff_.str();
  if (!irr.empty()) out += " * " + irr;
  return out;
}

}  // namespace hornrmt
