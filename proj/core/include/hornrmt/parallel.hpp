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


#ifndef HORNRMT_PARALLEL_HPP
#define HORNRMT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hornrmt {

/// Resolves a requested worker count: 0 means one per hardware thread.
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// out[i] = f(i) for i < count. Worker w evaluates the indices i with
/// i % workers == w. The result is independent of the worker count as long
/// as f(i) depends only on i.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned workers, F&& f) {
  std::vector<T> out(count);
  const unsigned w_count = resolve_workers(workers);
  if (w_count <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(w_count);
  std::vector<std::thread> threads;
  threads.reserve(w_count);
  for (unsigned w = 0; w < w_count; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += w_count) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hornrmt

#endif  // HORNRMT_PARALLEL_HPP
