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


#include "hornrmt/horn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hornrmt {

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace detail {
void check_permutation(const Permutation& perm, std::size_t n) {
  std::vector<bool> seen(n, false);
  bool ok = perm.size() == n;
  for (std::size_t v : perm) {
    if (!ok) break;
    if (v >= n || seen[v]) ok = false;
    else seen[v] = true;
  }
  if (!ok) {
    std::ostringstream os;
    os << "not a permutation of {0, ..., " << (n == 0 ? 0 : n - 1) << "}";
    throw DomainError(os.str());
  }
}
}  // namespace detail

int permutation_sign(const Permutation& perm) {
  detail::check_permutation(perm, perm.size());
  std::vector<bool> visited(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = perm[j]) {
      visited[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

double b_coefficient(std::size_t k, const Permutation& sigma, const Permutation& tau,
                     const Spectrum& a, const Spectrum& b, std::span<const double> c_diag) {
  return horn_partial_sum<double>(k, sigma, tau, a.values(), b.values(), c_diag);
}

double a_coefficient(std::size_t k, const Permutation& sigma, const Permutation& tau,
                     const Spectrum& a, const Spectrum& b, const Spectrum& c) {
  return horn_partial_sum<double>(k, sigma, tau, a.values(), b.values(), c.values());
}

SpectrumPair2::SpectrumPair2(Spectrum a, Spectrum b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.dim() != 2 || b_.dim() != 2) {
    std::ostringstream os;
    os << "SpectrumPair2 requires two spectra of dimension 2, got " << a_.dim() << " and "
       << b_.dim();
    throw DomainError(os.str());
  }
}

GapInterval gap_interval(const SpectrumPair2& pair) {
  return {std::abs(pair.alpha() - pair.beta()), pair.alpha() + pair.beta()};
}

namespace {

void require_nondegenerate(const SpectrumPair2& pair) {
  if (pair.degenerate()) {
    std::ostringstream os;
    os << "degenerate orbit: alpha = " << pair.alpha() << ", beta = " << pair.beta()
       << " (the law of the sum is not continuous)";
    throw DegenerateOrbitError(os.str());
  }
}

double sgn(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

}  // namespace

double diag_pdf_2x2(const SpectrumPair2& pair, double c11, double trace) {
  require_nondegenerate(pair);
  if (!(std::abs(trace - pair.trace()) <= 1e-9)) {
    std::ostringstream os;
    os << "diag_pdf_2x2: trace " << trace << " differs from tr a + tr b = " << pair.trace();
    throw DomainError(os.str());
  }
  const double al = pair.alpha(), be = pair.beta();
  const double g = 2.0 * c11 - trace;
  const double bracket = std::abs(al + be - g) + std::abs(al + be + g) -
                         std::abs(al - be - g) - std::abs(al - be + g);
  return bracket / (4.0 * al * be);
}

double eigen_gap_pdf_2x2(const SpectrumPair2& pair, double gap) {
  require_nondegenerate(pair);
  const GapInterval interval = gap_interval(pair);
  if (!interval.contains_open(gap)) return 0.0;
  return gap / (2.0 * pair.alpha() * pair.beta());
}

double eigen_pdf_2x2_from_diag(const SpectrumPair2& pair, double gap) {
  require_nondegenerate(pair);
  if (gap < 0.0) {
    std::ostringstream os;
    os << "eigen_pdf_2x2_from_diag: ordered gap must be nonnegative, got " << gap;
    throw DomainError(os.str());
  }
  const double al = pair.alpha(), be = pair.beta();
  const GapInterval interval = gap_interval(pair);
  if (gap == interval.low || gap == interval.high) {
    std::ostringstream os;
    os << "eigen_pdf_2x2_from_diag: gap " << gap << " is a kink of the diagonal density";
    throw DomainError(os.str());
  }
  // On the slice, d/dc1 - d/dc2 acts on the bracket variable g = c1 - c2 as 2 d/dg.
  const double dbracket = -sgn(al + be - gap) + sgn(al + be + gap) + sgn(al - be - gap) -
                          sgn(al - be + gap);
  const double dq = 2.0 * dbracket / (4.0 * al * be);
  // Unordered density -(1/2) Delta (d1 - d2) q; the ordered gap collects both
  // orderings and the change of variables (c1, c2) -> (t, d) has Jacobian 1/2.
  const double unordered = -0.5 * gap * dq;
  return 2.0 * 0.5 * unordered;
}

}  // namespace hornrmt
