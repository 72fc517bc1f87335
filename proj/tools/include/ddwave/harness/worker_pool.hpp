#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ddwave::harness {

/// Worker count for a --jobs value; 0 means one per hardware thread.
inline unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls task(i) for every i < count on up to `jobs` threads.
///
/// Tasks write into caller-owned slots indexed by i, so results never depend
/// on completion order. If any task throws, the exception of the lowest
/// failing index is rethrown after all workers have joined.
template <class Task>
void parallel_for(std::size_t count, unsigned jobs, Task&& task) {
  if (count == 0) return;
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, count);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(drain);
    drain();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace ddwave::harness
