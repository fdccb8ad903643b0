#ifndef MONO_CORE_PARALLEL_HPP
#define MONO_CORE_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace mono {

// Runs fn(begin, end) over `threads` contiguous chunks of [0, n). Chunk
// boundaries depend only on n and threads, so any per-index output slots
// are filled identically for every thread count.
template <class Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
  if (n == 0) return;
  if (threads < 1) threads = 1;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace mono

#endif
