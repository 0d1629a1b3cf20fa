#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <omp.h>

namespace llab {

/// Number of fixed blocks used by deterministic reductions. The partition
/// depends only on the range length, never on the thread count, so results
/// are bit-identical however many workers run.
inline constexpr std::size_t kReductionBlocks = 64;

/// Sum f(i) over [0, n) in parallel with a thread-count independent order.
template <class T, class F>
T deterministic_sum(std::size_t n, F&& f) {
  const std::size_t blocks = n < kReductionBlocks ? (n == 0 ? 1 : n) : kReductionBlocks;
  std::vector<T> partial(blocks, T{});
  const auto nb = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t lo = n * static_cast<std::size_t>(b) / blocks;
    const std::size_t hi = n * static_cast<std::size_t>(b + 1) / blocks;
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += f(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

/// Serial counterpart of deterministic_sum with the same block structure.
template <class T, class F>
T deterministic_sum_serial(std::size_t n, F&& f) {
  const std::size_t blocks = n < kReductionBlocks ? (n == 0 ? 1 : n) : kReductionBlocks;
  T total{};
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = n * b / blocks;
    const std::size_t hi = n * (b + 1) / blocks;
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += f(i);
    total += acc;
  }
  return total;
}

}  // namespace llab
