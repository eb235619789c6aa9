#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace onestep {

/// Runs fn(0..count-1) across up to `threads` workers using a static block
/// partition. Results must depend only on the index (write to distinct
/// slots), which makes the outcome independent of the thread count. If
/// several calls throw, the exception from the lowest index is rethrown.
template <class Fn>
void parallel_for_index(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::size_t> error_index(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      for (std::size_t i = begin; i < end; ++i) {
        try {
          fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
          error_index[w] = i;
          return;
        }
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  std::size_t first = count;
  std::size_t slot = workers;
  for (std::size_t w = 0; w < workers; ++w) {
    if (errors[w] && error_index[w] < first) {
      first = error_index[w];
      slot = w;
    }
  }
  if (slot < workers) std::rethrow_exception(errors[slot]);
}

}  // namespace onestep
