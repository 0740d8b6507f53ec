#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace roughtop {

/// Worker count: ROUGHTOP_THREADS when set, hardware concurrency otherwise,
/// never more than the shard count.
inline int thread_count_from_env(int max_shards) {
  int n = 0;
  if (const char* env = std::getenv("ROUGHTOP_THREADS")) n = std::atoi(env);
  if (n < 1) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  return std::min(n, std::max(1, max_shards));
}

/// Runs fn(shard) for every shard index, pulling indices from a shared
/// counter. Work must be independent per shard; the first exception thrown
/// by any worker is rethrown after the pool drains.
template <typename Fn>
void parallel_shards(int nshards, int nthreads, Fn&& fn) {
  if (nthreads <= 1) {
    for (int i = 0; i < nshards; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < nshards;) {
        if (failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) first_error = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace roughtop
