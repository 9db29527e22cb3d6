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


#include "hornrmt/weighted_density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hornrmt/error.hpp"

namespace hornrmt {

WeightedDensity::WeightedDensity(SparsePolynomial poly, Rational quad, Rational lin, unsigned pow,
                                 DensityDomain domain, SymbolicConstant scale)
    : poly_(std::move(poly)),
      quad_(std::move(quad)),
      lin_(std::move(lin)),
      pow_(pow),
      domain_(domain),
      scale_(std::move(scale)) {
  if (quad_ < 0) throw DomainError("WeightedDensity: quadratic weight coefficient must be >= 0");
  if (quad_ > 0 && domain_ != DensityDomain::FullSpace)
    throw DomainError("WeightedDensity: a Gaussian weight requires the full-space domain");
  if (quad_ == 0 && (pow_ > 0 || lin_ != 0) && domain_ != DensityDomain::PositiveOrthant)
    throw DomainError(
        "WeightedDensity: power or linear-exponential weights without a Gaussian factor "
        "require the positive-orthant domain");
  canonicalize();
}

void WeightedDensity::canonicalize() {
  const std::size_t n = poly_.n();
  if (domain_ == DensityDomain::FullSpace) {
    if (pow_ > 0) {
      for (std::size_t i = 0; i < n; ++i) poly_ = poly_.times_variable(i, pow_);
      pow_ = 0;
    }
    return;
  }
  if (poly_.is_zero()) return;
  const auto m = poly_.common_monomial();
  unsigned shift = m.empty() ? 0 : m[0];
  for (unsigned v : m) shift = std::min(shift, v);
  if (shift > 0) {
    poly_ = poly_.divided_by_monomial(SparsePolynomial::Exponent(n, shift));
    pow_ += shift;
  }
}

WeightedDensity WeightedDensity::with_poly(SparsePolynomial poly, unsigned pow) const {
  return WeightedDensity(std::move(poly), quad_, lin_, pow, domain_, scale_);
}

WeightedDensity WeightedDensity::scaled(const SymbolicConstant& c) const {
  return WeightedDensity(poly_, quad_, lin_, pow_, domain_, scale_ * c);
}

SparsePolynomial WeightedDensity::expanded_poly() const { return poly_ * scale_.coeff(); }

namespace {

void require_compatible(const WeightedDensity& a, const WeightedDensity& b) {
  if (a.n() != b.n() || a.quad() != b.quad() || a.lin() != b.lin() ||
      a.domain() != b.domain() || a.scale().radicand() != b.scale().radicand() ||
      a.scale().half_pi_power() != b.scale().half_pi_power())
    throw DomainError("WeightedDensity: sum of densities with different weights");
}

SparsePolynomial raise_all(const SparsePolynomial& p, unsigned by) {
  SparsePolynomial out = p;
  if (by == 0) return out;
  for (std::size_t i = 0; i < p.n(); ++i) out = out.times_variable(i, by);
  return out;
}

}  // namespace

WeightedDensity WeightedDensity::operator+(const WeightedDensity& o) const {
  if (scale_.is_zero() || poly_.is_zero()) return o;
  if (o.scale_.is_zero() || o.poly_.is_zero()) return *this;
  require_compatible(*this, o);
  const unsigned base = std::min(pow_, o.pow_);
  const SparsePolynomial sum =
      raise_all(expanded_poly(), pow_ - base) + raise_all(o.expanded_poly(), o.pow_ - base);
  const SymbolicConstant irr(Rational(1), scale_.radicand(), scale_.half_pi_power());
  return WeightedDensity(sum, quad_, lin_, base, domain_, irr);
}

WeightedDensity WeightedDensity::operator-(const WeightedDensity& o) const {
  return *this + o.scaled(SymbolicConstant(Rational(-1)));
}

bool WeightedDensity::operator==(const WeightedDensity& o) const {
  const bool zero_a = scale_.is_zero() || poly_.is_zero();
  const bool zero_b = o.scale_.is_zero() || o.poly_.is_zero();
  if (zero_a || zero_b) return zero_a == zero_b;
  return n() == o.n() && quad_ == o.quad_ && lin_ == o.lin_ && pow_ == o.pow_ &&
         domain_ == o.domain_ && scale_.radicand() == o.scale_.radicand() &&
         scale_.half_pi_power() == o.scale_.half_pi_power() &&
         expanded_poly() == o.expanded_poly();
}

double WeightedDensity::evaluate(std::span<const double> x) const {
  detail::require(x.size() == n(), "WeightedDensity::evaluate: argument length mismatch");
  const double q = static_cast<double>(quad_), l = static_cast<double>(lin_);
  double exponent = 0.0, power = 1.0;
  for (double v : x) {
    if (domain_ == DensityDomain::PositiveOrthant && v < 0.0) return 0.0;
    exponent -= q * v * v + l * v;
    if (pow_ > 0) power *= std::pow(v, static_cast<double>(pow_));
  }
  return scale_.to_double() * poly_.evaluate(x) * power * std::exp(exponent);
}

std::string WeightedDensity::to_string() const {
  std::ostringstream os;
  const SparsePolynomial p = expanded_poly();
  os << "sum(" << p.to_string() << ")";
  const std::string irr = scale_.irrational_string();
  if (!irr.empty() && !p.is_zero()) os << " * " << irr;
  if (pow_ > 0) os << " * prod(x_i)^" << pow_;
  std::string exponent;
  if (quad_ != 0) exponent += "-" + quad_.str() + " * sum(x_i^2)";
  if (lin_ != 0) {
    if (!exponent.empty()) exponent += lin_ > 0 ? " - " : " + ";
    else if (lin_ > 0) exponent += "-";
    exponent += Rational(boost::multiprecision::abs(lin_)).str() + " * sum(x_i)";
  }
  if (!exponent.empty()) os << " * exp(" << exponent << ")";
  os << " on " << (domain_ == DensityDomain::FullSpace ? "R^" : "[0,inf)^") << n();
  return os.str();
}

}  // namespace hornrmt
