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

#ifndef HORNRMT_RANDOM_STREAM_HPP
#define HORNRMT_RANDOM_STREAM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace hornrmt {

/// Seeded, reproducible source of draws. Identical (seed, stream_id) pairs
/// give identical sequences. Streams are cheap to construct, so Monte Carlo
/// loops open one per draw index. A stream must not be shared across threads.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Independent child stream with the same seed, keyed by `index`. Monte
  /// Carlo loops use one child per draw so results do not depend on how
  /// draws are spread over threads.
  RandomStream substream(std::uint64_t index) const;

  /// Standard normal N(0, 1).
  double normal();
  /// Uniform on [0, 1).
  double uniform();
  /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
  std::complex<double> complex_gaussian();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace hornrmt

#endif  // HORNRMT_RANDOM_STREAM_HPP
