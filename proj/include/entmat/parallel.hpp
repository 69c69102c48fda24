#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace entmat {

/// Runs fn(i) for i in [0, count) across up to `jobs` threads and returns the
/// results in index order. Work items must be independent; merging by index
/// keeps the output identical for any job count.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int jobs, F fn) {
  std::vector<T> out(count);
  if (count == 0) return out;
  std::size_t workers = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
  if (workers > count) workers = count;
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace entmat
