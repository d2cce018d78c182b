#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace pww {

// Runs fn(begin, end, chunk_index) over a fixed even partition of [0, total).
// Chunk boundaries depend only on (total, threads), so callers that merge
// per-chunk results in chunk order stay deterministic for any thread count.
template <typename Fn>
void for_chunks(std::int64_t total, int threads, Fn&& fn) {
  if (total <= 0) return;
  if (threads <= 1 || total < 2 * threads) {
    fn(std::int64_t{0}, total, 0);
    return;
  }
  const std::int64_t base = total / threads;
  const std::int64_t extra = total % threads;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  std::int64_t begin = 0;
  for (int c = 0; c < threads; ++c) {
    const std::int64_t len = base + (c < extra ? 1 : 0);
    const std::int64_t end = begin + len;
    pool.emplace_back([&fn, begin, end, c] { fn(begin, end, c); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace pww
