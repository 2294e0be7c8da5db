#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace chaincode {

/// Worker count: CHAINCODE_THREADS caps it when set; defaults to the
/// hardware concurrency clamped to 8.
inline unsigned thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned def = hw == 0 ? 1 : (hw > 8 ? 8 : hw);
  if (const char* env = std::getenv("CHAINCODE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return def;
}

/// Static partition of [0, n) across workers; results must be collected by
/// index by the caller so output stays deterministic.  Exceptions from
/// workers are rethrown on the calling thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned threads = thread_count();
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace chaincode
