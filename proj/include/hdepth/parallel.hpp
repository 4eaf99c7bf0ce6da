#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hdepth {

inline int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Applies fn to every index in [0, count) and returns the results in index
/// order. Work items are claimed dynamically, each result lands in its own
/// slot, so the output is identical for any worker count.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int workers, Fn fn) {
  std::vector<T> out(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> threads;
  const int nw = std::min<int>(workers, static_cast<int>(count));
  threads.reserve(static_cast<std::size_t>(nw));
  for (int t = 0; t < nw; ++t) threads.emplace_back(run);
  for (auto& th : threads) th.join();
  return out;
}

}  // namespace hdepth
