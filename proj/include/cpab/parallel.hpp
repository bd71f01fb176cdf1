#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace cpab {

// Runs f(i) for i in [0, n). Work is split into contiguous index ranges, one
// per worker, so each output slot is written by exactly one thread and the
// result is independent of scheduling.
template <typename F>
void parallel_for(int n, F &&f, int grain = 4096) {
  if (n <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  int workers = static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 16));
  workers = std::min(workers, (n + grain - 1) / grain);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    pool.emplace_back([lo, hi, &f] {
      for (int i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto &t : pool) t.join();
}

} // namespace cpab
