// Copyright 2026 The unimod authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIMOD_PARALLEL_HPP
#define UNIMOD_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace unimod {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Partitions [begin, end) into one contiguous chunk per worker and reduces
/// the per-chunk results in chunk order, so the outcome is independent of
/// scheduling. Fn: (int64_t chunk_begin, int64_t chunk_end) -> R;
/// R must be default-constructible and support +=.
template <class R, class Fn>
R parallel_reduce(int64_t begin, int64_t end, int threads, Fn fn) {
  int n = resolve_threads(threads);
  int64_t total = end - begin;
  if (total <= 0) return R{};
  if (n == 1 || total < 2 * n) return fn(begin, end);
  std::vector<R> partial(n);
  {
    std::vector<std::jthread> workers;
    workers.reserve(n);
    for (int i = 0; i < n; ++i) {
      int64_t lo = begin + total * i / n;
      int64_t hi = begin + total * (i + 1) / n;
      workers.emplace_back([&partial, i, lo, hi, &fn] { partial[i] = fn(lo, hi); });
    }
  }
  R acc{};
  for (const R& p : partial) acc += p;
  return acc;
}

}  // namespace unimod

#endif  // UNIMOD_PARALLEL_HPP
