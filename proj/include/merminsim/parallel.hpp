#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace merminsim {

inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count). Each index must be independent; callers
// write into preallocated slots so the result layout is order-free.
inline void parallel_for_index(std::size_t count, int threads,
                               const std::function<void(std::size_t)>& fn) {
  threads = std::min<std::size_t>(resolve_thread_count(threads),
                                  count == 0 ? 1 : count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Splits [0, count) into one contiguous chunk per worker and runs
// fn(worker_id, begin, end). worker_id < resolve_thread_count(threads), so
// callers can preallocate per-worker accumulators by that count.
inline void parallel_for_chunks(
    std::size_t count, int threads,
    const std::function<void(int, std::size_t, std::size_t)>& fn) {
  threads = std::min<std::size_t>(resolve_thread_count(threads),
                                  count == 0 ? 1 : count);
  std::size_t chunk = (count + threads - 1) / threads;
  if (threads <= 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([t, begin, end, &fn] { fn(t, begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace merminsim
