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

#ifndef HORNRMT_SPECIAL_FUNCTIONS_HPP
#define HORNRMT_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <sstream>
#include <vector>

#include "hornrmt/error.hpp"

namespace hornrmt {

/// Physicists' Hermite polynomial H_k(x) via H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite_H(unsigned k, double x);

/// Normalized Hermite function
///   phi_k(x) = (2^k k! sqrt(pi))^{-1/2} exp(-x^2/2) H_k(x).
/// The prefactor is assembled in log space (lgamma) and the recurrence is
/// rescaled on the fly, so k in the hundreds neither overflows nor loses the
/// Gaussian factor.
double hermite_phi(unsigned k, double x);

/// Density of one eigenvalue of GUE(n): (1/n) sum_{k<n} phi_k(x)^2.
double single_eigenvalue_density(unsigned n, double x);

/// Christoffel-Darboux form of the same density:
///   phi_n(x)^2 - sqrt(1 + 1/n) phi_{n-1}(x) phi_{n+1}(x).
double single_eigenvalue_density_cd(unsigned n, double x);

/// Density of one eigenvalue of a sum of K i.i.d. GUE(n) matrices:
///   (1/(n sqrt K)) sum_{k<n} phi_k(x/sqrt K)^2.
double single_eigenvalue_density_sum(unsigned n, unsigned K, double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
template <class T>
T pochhammer(const T& a, unsigned k) {
  T prod = T(1);
  for (unsigned j = 0; j < k; ++j) prod *= a + T(static_cast<int>(j));
  return prod;
}

/// Kummer's confluent hypergeometric function F(a, c; z) = sum (a)_k z^k /((c)_k k!)
/// for a nonpositive integer a, where the series terminates after 1 - a
/// terms. Works for any field type (double, exact rationals).
template <class T>
T confluent_F_terminating(int a, const T& c, const T& z) {
  if (a > 0) throw DomainError("confluent_F_terminating: a must be a nonpositive integer");
  T term = T(1);
  T sum = T(1);
  for (int k = 0; k < -a; ++k) {
    // term_{k+1} = term_k * (a+k) z / ((c+k)(k+1))
    term *= T(a + k) * z;
    term /= (c + T(k)) * T(k + 1);
    sum += term;
  }
  return sum;
}

/// F(a, c; z) for real a. Nonpositive-integer a gives the exact finite sum;
/// other a sum the (entire) series until terms fall below double precision.
/// Rejects non-finite z and c in {0, -1, -2, ...}.
double confluent_F(double a, double c, double z);

/// Coefficients of F(a, c; z) as a polynomial in z (a a nonpositive integer),
/// lowest degree first.
std::vector<double> confluent_F_coefficients(int a, double c);

/// Binary entropy in nats, H2(x) = -x ln x - (1-x) ln(1-x), with 0 ln 0 = 0.
double binary_entropy(double x);

/// Antiderivative of H2:
///   F0(x) = (1/4)(1-x)^2 [2 ln(1-x) - 1] - (1/4) x^2 (2 ln x - 1).
double F0(double x);

/// Antiderivative of x H2(x):
///   F1(x) = (1/4)(1-x)^2[2 ln(1-x) - 1] - (1/9)(1-x)^3[3 ln(1-x) - 1]
///           - (1/9) x^3 (3 ln x - 1).
double F1(double x);

}  // namespace hornrmt

#endif  // HORNRMT_SPECIAL_FUNCTIONS_HPP
