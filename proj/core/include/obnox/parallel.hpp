#ifndef OBNOX_PARALLEL_HPP
#define OBNOX_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace obnox {

/// Runs fn(chunk_index) for chunk_index in [0, n_chunks) on up to `threads`
/// worker threads and returns the results in chunk order. The chunk
/// decomposition is fixed by the caller, so reducing the returned vector in
/// order yields the same value for any thread count.
template <typename Result, typename ChunkFn>
std::vector<Result> run_chunks(std::size_t n_chunks, int threads, ChunkFn fn) {
  std::vector<Result> results(n_chunks);
  if (n_chunks == 0) return results;
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(n_chunks)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n_chunks; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n_chunks) return;
        results[i] = fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace obnox

#endif
