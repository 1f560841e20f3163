#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace dpplab::par {

inline int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, n) into contiguous chunks, one worker thread per chunk.
// Replica-level parallelism only; determinism comes from counter-based
// seeding, not from scheduling.
inline void parallel_chunks(long n, int threads,
                            const std::function<void(long, long)>& body) {
  threads = std::max(1, std::min<long>(threads, n));
  if (threads == 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const long chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long lo = t * chunk;
    const long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace dpplab::par
