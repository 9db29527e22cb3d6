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

#ifndef HORNRMT_ERROR_HPP
#define HORNRMT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hornrmt {

/// Raised when an argument violates a documented precondition or type
/// invariant. The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A two-point orbit (equal eigenvalues) was passed where a continuous
/// density is required; its law is a point mass.
class DegenerateOrbitError : public DomainError {
 public:
  explicit DegenerateOrbitError(const std::string& what) : DomainError(what) {}
};

/// Raised when a numerical procedure fails to reach its target accuracy.
/// The CLI maps it to exit code 1.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] void throw_domain(const std::string& what);
inline void require(bool condition, const std::string& what) {
  if (!condition) throw_domain(what);
}
}  // namespace detail

}  // namespace hornrmt

#endif  // HORNRMT_ERROR_HPP
