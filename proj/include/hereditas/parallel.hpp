#pragma once

// Index-parallel evaluation. Results are stored by index, so the output never
// depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hereditas {

/// out[i] = fn(i) for i in [0, count), on up to `jobs` threads.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, Fn&& fn) {
  std::vector<std::optional<T>> slots(count);
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex m;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            slots[i].emplace(fn(i));
          } catch (...) {
            std::lock_guard<std::mutex> lock(m);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Smallest i in [0, count) with pred(i), evaluating in chunks so the search
/// can stop early; the answer equals the sequential one.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, std::size_t jobs, Pred&& pred) {
  const std::size_t chunk = std::max<std::size_t>(64, 16 * std::max<std::size_t>(1, jobs));
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t n = std::min(chunk, count - start);
    const auto hits = parallel_map<char>(n, jobs, [&](std::size_t i) -> char { return pred(start + i) ? 1 : 0; });
    for (std::size_t i = 0; i < n; ++i)
      if (hits[i]) return start + i;
  }
  return std::nullopt;
}

}  // namespace hereditas
