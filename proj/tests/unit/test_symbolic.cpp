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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hornrmt/error.hpp"
#include "hornrmt/polynomial.hpp"
#include "hornrmt/symbolic_constant.hpp"

namespace hornrmt {
namespace {

using E = SparsePolynomial::Exponent;

TEST(SymbolicConstant, SquarefreeCanonicalForm) {
  const SymbolicConstant a = SymbolicConstant::sqrt_of(Rational(8));
  EXPECT_EQ(a.coeff(), Rational(2));
  EXPECT_EQ(a.radicand(), Integer(2));
  const SymbolicConstant b = SymbolicConstant::sqrt_of(Rational(1, 2));
  EXPECT_EQ(b.coeff(), Rational(1, 2));
  EXPECT_EQ(b.radicand(), Integer(2));
  EXPECT_EQ(SymbolicConstant(Rational(3), Integer(12), 0), SymbolicConstant(Rational(6), Integer(3), 0));
  EXPECT_EQ(SymbolicConstant::sqrt_of(Rational(9, 4)), SymbolicConstant(Rational(3, 2)));
}

TEST(SymbolicConstant, Arithmetic) {
  const SymbolicConstant r2 = SymbolicConstant::sqrt_of(Rational(2));
  const SymbolicConstant r6 = SymbolicConstant::sqrt_of(Rational(6));
  EXPECT_EQ(r2 * r2, SymbolicConstant(Rational(2)));
  EXPECT_EQ(r2 * r6, SymbolicConstant(Rational(2), Integer(3), 0));
  EXPECT_EQ(r6 / r2, SymbolicConstant::sqrt_of(Rational(3)));
  const SymbolicConstant pi = SymbolicConstant::pi_half_power(2);
  EXPECT_EQ(SymbolicConstant::pi_half_power(1) * SymbolicConstant::pi_half_power(1), pi);
  EXPECT_NEAR(pi.to_double(), std::numbers::pi, 1e-15);
  EXPECT_EQ((-r2).coeff(), Rational(-1));
  EXPECT_TRUE(SymbolicConstant(Rational(0)).is_zero());
}

TEST(SymbolicConstant, HalfPower) {
  EXPECT_EQ(SymbolicConstant::half_power(Rational(4), 3), SymbolicConstant(Rational(8)));
  EXPECT_EQ(SymbolicConstant::half_power(Rational(2), -3),
            SymbolicConstant(Rational(1, 4), Integer(2), 0));
  const SymbolicConstant v = SymbolicConstant::half_power(Rational(2, 3), 5);
  EXPECT_NEAR(v.to_double(), std::pow(2.0 / 3.0, 2.5), 1e-15);
  EXPECT_THROW(SymbolicConstant::half_power(Rational(-1), 1), DomainError);
}

TEST(SymbolicConstant, Strings) {
  const SymbolicConstant c =
      SymbolicConstant::sqrt_of(Rational(2)) * SymbolicConstant::pi_half_power(-3);
  EXPECT_EQ(c.irrational_string(), "sqrt(2) * pi^(-3/2)");
  EXPECT_EQ(SymbolicConstant(Rational(3, 4)).irrational_string(), "");
  EXPECT_EQ((SymbolicConstant(Rational(3, 4)) * SymbolicConstant::sqrt_of(Rational(2)) *
             SymbolicConstant::pi_half_power(-2))
                .to_string(),
            "3/4 * sqrt(2) * pi^(-1)");
}

TEST(Polynomial, ArithmeticAndCancellation) {
  const auto x = SparsePolynomial::variable(2, 0), y = SparsePolynomial::variable(2, 1);
  const SparsePolynomial d = x - y;
  const SparsePolynomial sq = d * d;
  EXPECT_EQ(sq.to_string(), "1 * x^(2,0) - 2 * x^(1,1) + 1 * x^(0,2)");
  EXPECT_TRUE((sq - sq).is_zero());
  EXPECT_EQ((sq - sq).to_string(), "0");
  EXPECT_EQ(sq.total_degree(), 2u);
  EXPECT_EQ(sq.coefficient({1, 1}), Rational(-2));
  EXPECT_EQ(sq.coefficient({3, 0}), Rational(0));
  EXPECT_EQ((sq * Rational(1, 2)).coefficient({2, 0}), Rational(1, 2));
  EXPECT_THROW(x + SparsePolynomial::variable(3, 0), DomainError);
}

TEST(Polynomial, DerivativeAndShift) {
  SparsePolynomial p(2);
  p.add_term({3, 1}, Rational(2));
  p.add_term({0, 2}, Rational(-1));
  const SparsePolynomial dx = p.derivative(0);
  EXPECT_EQ(dx.coefficient({2, 1}), Rational(6));
  EXPECT_EQ(dx.terms().size(), 1u);
  EXPECT_EQ(p.derivative(1).coefficient({0, 1}), Rational(-2));
  EXPECT_EQ(p.times_variable(1, 2).coefficient({3, 3}), Rational(2));
  EXPECT_EQ(p.swapped(0, 1).coefficient({1, 3}), Rational(2));
  EXPECT_EQ(p.swapped(0, 1).swapped(0, 1), p);
}

TEST(Polynomial, MonomialDivision) {
  SparsePolynomial p(3);
  p.add_term({2, 1, 3}, Rational(1));
  p.add_term({1, 2, 1}, Rational(5));
  EXPECT_EQ(p.common_monomial(), (E{1, 1, 1}));
  const SparsePolynomial q = p.divided_by_monomial({1, 1, 1});
  EXPECT_EQ(q.coefficient({1, 0, 2}), Rational(1));
  EXPECT_EQ(q.coefficient({0, 1, 0}), Rational(5));
  EXPECT_THROW(p.divided_by_monomial({2, 0, 0}), DomainError);
}

TEST(Polynomial, DivideExact) {
  const SparsePolynomial v = vandermonde_polynomial(3);
  SparsePolynomial other(3);
  other.add_term({1, 0, 0}, Rational(2));
  other.add_term({0, 0, 4}, Rational(-3, 7));
  const SparsePolynomial prod = v * other;
  const auto q = prod.divide_exact(v);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, other);
  EXPECT_FALSE((prod + SparsePolynomial::constant(3, Rational(1))).divide_exact(v).has_value());
}

TEST(Polynomial, VandermondeValues) {
  const SparsePolynomial v = vandermonde_polynomial(3);
  const std::vector<double> x{3.0, 1.0, -2.0};
  EXPECT_EQ(v.evaluate(x), (3.0 - 1.0) * (3.0 + 2.0) * (1.0 + 2.0));
  const std::vector<Rational> r{Rational(1, 2), Rational(1, 3), Rational(1, 5)};
  EXPECT_EQ(v.evaluate(r), Rational(1, 6) * Rational(3, 10) * Rational(2, 15));
  // Antisymmetry under a transposition.
  EXPECT_EQ(v.swapped(0, 2), -v);
  EXPECT_EQ(vandermonde_polynomial(1), SparsePolynomial::constant(1, Rational(1)));
}

}  // namespace
}  // namespace hornrmt
