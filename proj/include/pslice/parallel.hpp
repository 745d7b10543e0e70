#pragma once

// Deterministic data parallelism over an index range: the range is cut into
// fixed chunks, workers claim chunks in order, and results are returned in
// chunk order so that aggregation never depends on the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pslice {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Calls fn(begin, end) on consecutive chunks of [0, total) and returns the
/// per-chunk results in chunk order. The exception of the lowest failing
/// chunk is rethrown after all workers stop. `done` (if set) is called with
/// the number of indices completed so far, from one thread at a time.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t total, std::uint64_t chunk, int threads, Fn&& fn,
                                    const std::function<void(std::uint64_t)>& done = {}) {
  if (chunk == 0) chunk = 1;
  const std::uint64_t nchunks = (total + chunk - 1) / chunk;
  std::vector<Result> results(nchunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::uint64_t completed = 0;
  std::uint64_t first_failure = nchunks;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      const std::uint64_t begin = c * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      try {
        results[c] = fn(begin, end);
      } catch (...) {
        std::lock_guard lock(mu);
        if (c < first_failure) {
          first_failure = c;
          error = std::current_exception();
        }
        failed = true;
        return;
      }
      if (done) {
        std::lock_guard lock(mu);
        completed += end - begin;
        done(completed);
      }
    }
  };

  const int n = static_cast<int>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(nchunks, 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace pslice
