// Deterministic trial parallelism: each trial's generator depends only on
// (seed, trial index) and results are merged in trial order, so estimates are
// identical for any thread count. CAROMLAB_THREADS caps the pool.

#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace caromlab {

inline unsigned resolved_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CAROMLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = static_cast<unsigned>(v);
  }
  return hw;
}

template <typename Result, typename Fn>
std::vector<Result> map_trials(long trials, Fn&& fn) {
  std::vector<Result> results(static_cast<std::size_t>(trials));
  unsigned threads = resolved_thread_count();
  if (threads <= 1 || trials < 64) {
    for (long i = 0; i < trials; ++i) {
      results[static_cast<std::size_t>(i)] = fn(i);
    }
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (long i = static_cast<long>(t); i < trials;
           i += static_cast<long>(threads)) {
        results[static_cast<std::size_t>(i)] = fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace caromlab
