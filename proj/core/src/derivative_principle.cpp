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


#include "hornrmt/derivative_principle.hpp"

#include <sstream>

#include "hornrmt/error.hpp"

namespace hornrmt {

namespace {

Rational factorial(unsigned k) {
  Rational out = 1;
  for (unsigned j = 2; j <= k; ++j) out *= j;
  return out;
}

unsigned pair_count(std::size_t n) { return static_cast<unsigned>(n * (n - (n > 0)) / 2); }

}  // namespace

DiffOperatorProduct DiffOperatorProduct::vandermonde(std::size_t n) {
  DiffOperatorProduct op;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) op.pairs.emplace_back(i, j);
  return op;
}

WeightedDensity DiffOperatorProduct::apply(const WeightedDensity& d) const {
  WeightedDensity out = d;
  for (const auto& [i, j] : pairs) {
    detail::require(i < j && j < d.n(), "DiffOperatorProduct: invalid index pair");
    out = partial_derivative(out, i) - partial_derivative(out, j);
  }
  return out;
}

WeightedDensity partial_derivative(const WeightedDensity& d, std::size_t i) {
  const std::size_t n = d.n();
  if (i >= n) {
    std::ostringstream os;
    os << "partial_derivative: coordinate " << i << " out of range for n = " << n;
    throw DomainError(os.str());
  }
  const SparsePolynomial& p = d.poly();
  const SparsePolynomial xi = SparsePolynomial::variable(n, i);
  // weight'/weight = pow/x_i - 2 quad x_i - lin
  const SparsePolynomial log_weight_tail =
      SparsePolynomial::constant(n, -d.lin()) - xi * (Rational(2) * d.quad());
  if (d.pow() == 0) return d.with_poly(p.derivative(i) + p * log_weight_tail, 0);

  // Multiply through by x_i so the pow/x_i term stays polynomial, then restore a
  // uniform power by multiplying the other coordinates by x_j.
  SparsePolynomial numer = p.derivative(i).times_variable(i) +
                           p * (SparsePolynomial::constant(n, Rational(d.pow())) +
                                xi * log_weight_tail);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) numer = numer.times_variable(j);
  return d.with_poly(std::move(numer), d.pow() - 1);
}

WeightedDensity apply_vandermonde_operator(const WeightedDensity& d) {
  return DiffOperatorProduct::vandermonde(d.n()).apply(d);
}

WeightedDensity derivative_principle(const WeightedDensity& q) {
  const std::size_t n = q.n();
  const WeightedDensity dq = apply_vandermonde_operator(q);
  Rational prefactor = pair_count(n) % 2 == 0 ? 1 : -1;
  for (unsigned k = 1; k <= n; ++k) prefactor /= factorial(k);
  return dq.with_poly(vandermonde_polynomial(n) * dq.poly(), dq.pow())
      .scaled(SymbolicConstant(prefactor));
}

WeightedDensity gue_diag_density(unsigned n, unsigned K) {
  detail::require(n >= 1 && K >= 1, "gue_diag_density: n and K must be positive");
  const Rational k(K);
  const SymbolicConstant scale =
      SymbolicConstant::pi_half_power(-static_cast<int>(n)) *
      SymbolicConstant::half_power(k, -static_cast<int>(n));
  return WeightedDensity(SparsePolynomial::constant(n, 1), Rational(1) / k, 0, 0,
                         DensityDomain::FullSpace, scale);
}

WeightedDensity wishart_diag_density(unsigned m, unsigned n, unsigned K) {
  detail::require(m >= 1 && n >= 1 && K >= 1, "wishart_diag_density: m, n, K must be positive");
  if (m > n) {
    std::ostringstream os;
    os << "wishart_diag_density: requires m <= n, got m = " << m << ", n = " << n;
    throw DomainError(os.str());
  }
  const unsigned shape = K * n;
  Rational scale = 1;
  for (unsigned j = 0; j < m; ++j) scale /= factorial(shape - 1);
  return WeightedDensity(SparsePolynomial::constant(m, 1), 0, 1, shape - 1,
                         DensityDomain::PositiveOrthant, SymbolicConstant(scale));
}

WeightedDensity gue_sum_closed_form(unsigned n, unsigned K) {
  detail::require(n >= 1 && K >= 1, "gue_sum_closed_form: n and K must be positive");
  const Rational k(K);
  Rational c = 1;
  for (unsigned p = 0; p < pair_count(n); ++p) c *= Rational(2) / k;
  for (unsigned j = 1; j <= n; ++j) c /= factorial(j);
  const SymbolicConstant scale = SymbolicConstant(c) *
                                 SymbolicConstant::pi_half_power(-static_cast<int>(n)) *
                                 SymbolicConstant::half_power(k, -static_cast<int>(n));
  const SparsePolynomial v = vandermonde_polynomial(n);
  return WeightedDensity(v * v, Rational(1) / k, 0, 0, DensityDomain::FullSpace, scale);
}

WeightedDensity wishart_sum_closed_form(unsigned m, unsigned n, unsigned K) {
  detail::require(m >= 1 && n >= 1 && K >= 1, "wishart_sum_closed_form: m, n, K must be positive");
  if (m > n) {
    std::ostringstream os;
    os << "wishart_sum_closed_form: requires m <= n, got m = " << m << ", n = " << n;
    throw DomainError(os.str());
  }
  const unsigned exponent = K * n - m;
  Rational c = 1;
  for (unsigned j = 1; j <= m; ++j) c /= factorial(exponent + j - 1) * factorial(j);
  const SparsePolynomial v = vandermonde_polynomial(m);
  return WeightedDensity(v * v, 0, 1, exponent, DensityDomain::PositiveOrthant,
                         SymbolicConstant(c));
}

Normalization normalize(const WeightedDensity& d) {
  const std::size_t n = d.n();
  SymbolicConstant integral(Rational(0));
  if (d.quad() > 0) {
    if (d.lin() != 0)
      throw DomainError("normalize: Gaussian weights with a linear exponent are not supported");
    // int x^{2k} e^{-a x^2} dx = (2k-1)!! / (2a)^k * sqrt(pi / a)
    const Rational& a = d.quad();
    Rational sum = 0;
    for (const auto& [e, c] : d.poly().terms()) {
      Rational term = c;
      for (unsigned v : e) {
        if (v % 2 == 1) {
          term = 0;
          break;
        }
        for (unsigned j = 1; j < v; j += 2) term *= Rational(j) / (Rational(2) * a);
      }
      sum += term;
    }
    integral = SymbolicConstant(sum) *
               SymbolicConstant::half_power(Rational(1) / a, static_cast<int>(n)) *
               SymbolicConstant::pi_half_power(static_cast<int>(n));
  } else {
    if (d.domain() != DensityDomain::PositiveOrthant || d.lin() <= 0)
      throw DomainError("normalize: weight is not integrable (need quad > 0, or lin > 0 on the orthant)");
    // int_0^inf x^k e^{-b x} dx = k! / b^{k+1}
    const Rational& b = d.lin();
    Rational sum = 0;
    for (const auto& [e, c] : d.poly().terms()) {
      Rational term = c;
      for (unsigned v : e) {
        const unsigned k = v + d.pow();
        term *= factorial(k);
        for (unsigned j = 0; j <= k; ++j) term /= b;
      }
      sum += term;
    }
    integral = SymbolicConstant(sum);
  }
  integral = integral * d.scale();
  if (integral.is_zero()) throw DomainError("normalize: density integrates to zero");
  return {d.scaled(SymbolicConstant(Rational(1)) / integral), integral};
}

}  // namespace hornrmt
