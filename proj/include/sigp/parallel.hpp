#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace sigp {

// Worker-pool size from SIGP_WORKERS, else a small multiple of the hardware.
inline int worker_count_from_env() {
  if (const char* env = std::getenv("SIGP_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(hw == 0 ? 1 : (hw > 4 ? 4 : hw));
}

// Runs fn(i) for i in [0, count). Each call writes only its own slot, so the
// result is independent of the schedule; exceptions are rethrown, first
// index wins.
inline void parallel_for_index(std::size_t count, int workers,
                               const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  if (workers <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < count; i += nthreads) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace sigp
