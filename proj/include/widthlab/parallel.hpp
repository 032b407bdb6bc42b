#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace widthlab {

/// Worker count: WIDTHLAB_THREADS if set and positive, else the hardware
/// concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("WIDTHLAB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies fn to 0..count-1 on up to thread_count() threads; results keep
/// index order. The first exception thrown is rethrown.
template <typename Fn>
auto parallel_map(int count, Fn&& fn) -> std::vector<decltype(fn(0))> {
  std::vector<decltype(fn(0))> results(count);
  const int workers = std::min(thread_count(), std::max(count, 1));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace widthlab
