#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace oscylinder {

/// Number of worker threads to use; 0 selects the hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, count) on up to `threads` threads. Work is split
/// into contiguous blocks; body must only write to per-index state.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t block = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(count, begin + block);
    pool.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) {
        body(i);
      }
    });
  }
}

/// Recursive pairwise summation; the order of additions depends only on the
/// length of the input.
template <class T>
T pairwise_sum(std::span<const T> values) {
  if (values.size() <= 8) {
    T acc{};
    for (const T& v : values) {
      acc += v;
    }
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace oscylinder
