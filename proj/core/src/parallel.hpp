#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace boolinv::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into contiguous chunks, one per worker. Output order is
// fixed by chunk index, so callers that merge per-chunk results in order get
// the same answer for any thread count.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2 * threads) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  const std::size_t step = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(count, t * step);
    const std::size_t hi = std::min(count, lo + step);
    pool.emplace_back([&, t, lo, hi] {
      try {
        fn(t, lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace boolinv::detail
