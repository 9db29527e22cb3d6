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

#include "hornrmt/special_functions.hpp"

#include <limits>
#include <numbers>
#include <vector>

namespace hornrmt {
namespace {

constexpr double kRescaleThreshold = 1e150;

void require_unit_interval(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << who << ": argument must lie in [0, 1], got " << x;
    throw DomainError(os.str());
  }
}

// t * ln t with the continuous extension 0 at t = 0.
double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(t); }

// t^p * ln t for p >= 1, extended by 0 at t = 0.
double xplogx(double t, int p) { return t == 0.0 ? 0.0 : std::pow(t, p) * std::log(t); }

}  // namespace

double hermite_H(unsigned k, double x) {
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 2.0 * x;
  for (unsigned j = 1; j < k; ++j) {
    const double next = 2.0 * x * cur - 2.0 * static_cast<double>(j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_phi(unsigned k, double x) {
  // log of (2^k k! sqrt(pi))^{-1/2} e^{-x^2/2}
  const double log_prefactor =
      -0.5 * (k * std::numbers::ln2 + std::lgamma(k + 1.0) + 0.5 * std::log(std::numbers::pi)) -
      0.5 * x * x;
  double log_scale = 0.0;
  double prev = 1.0;
  double cur = (k == 0) ? 1.0 : 2.0 * x;
  for (unsigned j = 1; j < k; ++j) {
    double next = 2.0 * x * cur - 2.0 * static_cast<double>(j) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleThreshold) {
      cur /= kRescaleThreshold;
      prev /= kRescaleThreshold;
      log_scale += std::log(kRescaleThreshold);
    }
  }
  if (cur == 0.0) return 0.0;
  const double sign = cur < 0.0 ? -1.0 : 1.0;
  return sign * std::exp(std::log(std::abs(cur)) + log_scale + log_prefactor);
}

double single_eigenvalue_density(unsigned n, double x) {
  if (n == 0) throw DomainError("single_eigenvalue_density: n must be at least 1");
  double sum = 0.0;
  for (unsigned k = 0; k < n; ++k) {
    const double p = hermite_phi(k, x);
    sum += p * p;
  }
  return sum / n;
}

double single_eigenvalue_density_cd(unsigned n, double x) {
  if (n == 0) throw DomainError("single_eigenvalue_density_cd: n must be at least 1");
  const double pn = hermite_phi(n, x);
  return pn * pn - std::sqrt(1.0 + 1.0 / n) * hermite_phi(n - 1, x) * hermite_phi(n + 1, x);
}

double single_eigenvalue_density_sum(unsigned n, unsigned K, double x) {
  if (K == 0) throw DomainError("single_eigenvalue_density_sum: K must be at least 1");
  const double root = std::sqrt(static_cast<double>(K));
  return single_eigenvalue_density(n, x / root) / root;
}

double confluent_F(double a, double c, double z) {
  if (!std::isfinite(z)) throw DomainError("confluent_F: z must be finite");
  if (c <= 0.0 && c == std::floor(c))
    throw DomainError("confluent_F: c must not be a nonpositive integer");
  if (a <= 0.0 && a == std::floor(a)) {
    return confluent_F_terminating<double>(static_cast<int>(a), c, z);
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * z / ((c + k) * (k + 1));
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum) &&
        k > std::abs(z))
      return sum;
  }
  throw NumericalError("confluent_F: series did not converge");
}

std::vector<double> confluent_F_coefficients(int a, double c) {
  if (a > 0) throw DomainError("confluent_F_coefficients: a must be a nonpositive integer");
  if (c <= 0.0 && c == std::floor(c))
    throw DomainError("confluent_F_coefficients: c must not be a nonpositive integer");
  std::vector<double> coeffs{1.0};
  double term = 1.0;
  for (int k = 0; k < -a; ++k) {
    term *= (a + k) / ((c + k) * (k + 1));
    coeffs.push_back(term);
  }
  return coeffs;
}

double binary_entropy(double x) {
  require_unit_interval(x, "binary_entropy");
  return -xlogx(x) - xlogx(1.0 - x);
}

double F0(double x) {
  require_unit_interval(x, "F0");
  const double y = 1.0 - x;
  // (1/4) y^2 (2 ln y - 1) - (1/4) x^2 (2 ln x - 1)
  return 0.25 * (2.0 * xplogx(y, 2) - y * y) - 0.25 * (2.0 * xplogx(x, 2) - x * x);
}

double F1(double x) {
  require_unit_interval(x, "F1");
  const double y = 1.0 - x;
  const double a = 0.25 * (2.0 * xplogx(y, 2) - y * y);
  const double b = (3.0 * xplogx(y, 3) - y * y * y) / 9.0;
  const double c = (3.0 * xplogx(x, 3) - x * x * x) / 9.0;
  return a - b - c;
}

}  // namespace hornrmt
