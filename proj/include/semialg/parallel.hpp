#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace semialg {

// Shards [0, n) across `workers` threads. Results must be combined with an
// order-independent reduction by the caller; fn(shard_index, begin, end).
template <typename Fn>
void shard_range(std::size_t n, int workers, Fn&& fn) {
  if (workers <= 1 || n < 2048) {
    fn(0, std::size_t{0}, n);
    return;
  }
  std::size_t w = static_cast<std::size_t>(workers);
  if (w > n) w = n;
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t i = 0; i < w; ++i) {
    std::size_t begin = n * i / w;
    std::size_t end = n * (i + 1) / w;
    threads.emplace_back([&fn, i, begin, end] { fn(i, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace semialg
