#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace avgcase {

// Worker cap from AVGCASE_THREADS (0 or 1 = serial); hardware concurrency
// when unset or unparsable.
std::size_t thread_cap();

// Runs fn(i) for i in [0, count). Results must be written to per-index slots
// so aggregation order never depends on scheduling. The first exception
// thrown by any task is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min(thread_cap(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Stream id for trial `trial` of sweep point `sweep_index`; distinct pairs give
// distinct ids for trial < 2^40.
constexpr std::uint64_t trial_stream(std::uint64_t sweep_index, std::uint64_t trial) noexcept {
  return (sweep_index << 40) | trial;
}

}  // namespace avgcase
