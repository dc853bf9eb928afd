#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace chigen {

/// Worker count for parallel_for: CHIGEN_THREADS when set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
inline int worker_count() {
  if (const char* env = std::getenv("CHIGEN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256)
      return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [0, count). Work is handed out through a shared
/// atomic counter, so callers must key any output by i rather than by
/// completion order. The first exception (by index) is rethrown after all
/// workers finish.
inline void parallel_for(int count, const std::function<void(int)>& body) {
  int workers = worker_count();
  if (count <= 0) return;
  if (workers <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next(0);
  std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
  auto run = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        errors[static_cast<size_t>(i)] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min(workers, count);
  pool.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace chigen
