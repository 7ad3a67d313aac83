#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ffsqfree {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous slices, runs fn(begin, end) on each in
/// its own thread and sums the results in slice order.
template <class Fn>
auto parallel_reduce(std::uint64_t total, unsigned threads, Fn fn) -> decltype(fn(0, 0)) {
  using Result = decltype(fn(0, 0));
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), total));
  if (workers == 1) return fn(0, total);
  std::vector<Result> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        try {
          partial[w] = fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Result out = std::move(partial[0]);
  for (std::uint64_t w = 1; w < workers; ++w) out += partial[w];
  return out;
}

}  // namespace ffsqfree
