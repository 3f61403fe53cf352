#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace littlewood {

// Worker cap: LITTLEWOOD_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Independent stream for one block of work. Streams depend only on (seed, block),
// never on which thread runs the block, so results do not depend on worker count.
inline std::mt19937_64 block_stream(std::uint64_t seed, std::uint64_t block) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(block + 0x9e3779b97f4a7c15ULL)));
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
inline double uniform01(std::mt19937_64& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) noexcept {
  return lo + (hi - lo) * uniform01(rng);
}

struct BlockRange {
  std::size_t index;
  std::size_t begin;
  std::size_t end;
};

// Splits [0, n) into at most `blocks` contiguous ranges and runs fn on each,
// returning per-block results in block order.
template <class Fn>
auto run_blocks(std::size_t n, std::size_t blocks, Fn&& fn)
    -> std::vector<decltype(fn(BlockRange{}))> {
  using Result = decltype(fn(BlockRange{}));
  blocks = std::max<std::size_t>(1, std::min(blocks, std::max<std::size_t>(n, 1)));
  std::vector<BlockRange> ranges;
  ranges.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    ranges.push_back({b, n * b / blocks, n * (b + 1) / blocks});
  }

  std::vector<Result> results(blocks);
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(blocks));
  if (workers <= 1) {
    for (const auto& r : ranges) results[r.index] = fn(r);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      try {
        results[b] = fn(ranges[b]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace littlewood
