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


#include "hornrmt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hornrmt/error.hpp"

namespace hornrmt {

SparsePolynomial SparsePolynomial::constant(std::size_t n, const Rational& c) {
  SparsePolynomial p(n);
  p.add_term(Exponent(n, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t n, std::size_t i) {
  detail::require(i < n, "SparsePolynomial::variable: index out of range");
  Exponent e(n, 0);
  e[i] = 1;
  return monomial(n, std::move(e), 1);
}

SparsePolynomial SparsePolynomial::monomial(std::size_t n, Exponent e, const Rational& c) {
  detail::require(e.size() == n, "SparsePolynomial::monomial: exponent length mismatch");
  SparsePolynomial p(n);
  p.add_term(e, c);
  return p;
}

Rational SparsePolynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned SparsePolynomial::total_degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned v : e) d += v;
    deg = std::max(deg, d);
  }
  return deg;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  detail::require(e.size() == n_, "SparsePolynomial: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePolynomial::check_same_n(const SparsePolynomial& o) const {
  if (n_ != o.n_) {
    std::ostringstream os;
    os << "SparsePolynomial: variable count mismatch (" << n_ << " vs " << o.n_ << ")";
    throw DomainError(os.str());
  }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  check_same_n(o);
  SparsePolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  check_same_n(o);
  SparsePolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const { return *this * Rational(-1); }

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  check_same_n(o);
  SparsePolynomial out(n_);
  Exponent e(n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t k = 0; k < n_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
  SparsePolynomial out(n_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t i) const {
  detail::require(i < n_, "SparsePolynomial::derivative: index out of range");
  SparsePolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

SparsePolynomial SparsePolynomial::times_variable(std::size_t i, unsigned power) const {
  detail::require(i < n_, "SparsePolynomial::times_variable: index out of range");
  SparsePolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d[i] += power;
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

SparsePolynomial SparsePolynomial::swapped(std::size_t i, std::size_t j) const {
  detail::require(i < n_ && j < n_, "SparsePolynomial::swapped: index out of range");
  SparsePolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    std::swap(d[i], d[j]);
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

SparsePolynomial::Exponent SparsePolynomial::common_monomial() const {
  if (terms_.empty()) return Exponent(n_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < n_; ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

SparsePolynomial SparsePolynomial::divided_by_monomial(const Exponent& m) const {
  detail::require(m.size() == n_, "divided_by_monomial: exponent length mismatch");
  SparsePolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    for (std::size_t k = 0; k < n_; ++k) {
      detail::require(d[k] >= m[k], "divided_by_monomial: term not divisible");
      d[k] -= m[k];
    }
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

std::optional<SparsePolynomial> SparsePolynomial::divide_exact(const SparsePolynomial& d) const {
  check_same_n(d);
  detail::require(!d.is_zero(), "divide_exact: division by the zero polynomial");
  // Multivariate division with lexicographic leading terms; when d divides P
  // the leading term of d divides the leading term of every remainder.
  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  SparsePolynomial rem = *this;
  SparsePolynomial quotient(n_);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exponent q(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      if (re[k] < lead_e[k]) return std::nullopt;
      q[k] = re[k] - lead_e[k];
    }
    const Rational qc = rc / lead_c;
    const SparsePolynomial step = monomial(n_, q, qc);
    quotient = quotient + step;
    rem = rem - step * d;
  }
  return quotient;
}

double SparsePolynomial::evaluate(std::span<const double> x) const {
  detail::require(x.size() == n_, "SparsePolynomial::evaluate: argument length mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = static_cast<double>(c);
    for (std::size_t k = 0; k < n_; ++k)
      if (e[k] != 0) term *= std::pow(x[k], static_cast<double>(e[k]));
    acc += term;
  }
  return acc;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> x) const {
  detail::require(x.size() == n_, "SparsePolynomial::evaluate: argument length mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < n_; ++k)
      for (unsigned p = 0; p < e[k]; ++p) term *= x[k];
    acc += term;
  }
  return acc;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << Rational(boost::multiprecision::abs(c)).str() << " * x^(";
    for (std::size_t k = 0; k < n_; ++k) os << (k ? "," : "") << e[k];
    os << ")";
  }
  return os.str();
}

SparsePolynomial vandermonde_polynomial(std::size_t n) {
  SparsePolynomial out = SparsePolynomial::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out = out * (SparsePolynomial::variable(n, i) - SparsePolynomial::variable(n, j));
  return out;
}

}  // namespace hornrmt
