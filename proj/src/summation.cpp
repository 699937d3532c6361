#include "rqft/summation.hpp"

#include <atomic>
#include <thread>

namespace rqft {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) {
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  g_threads.store(n);
}

int thread_count() { return g_threads.load(); }

void parallel_for_blocks(std::size_t nblocks,
                         const std::function<void(std::size_t)>& fn) {
  const int nt = thread_count();
  if (nt <= 1 || nblocks <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      fn(b);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(nt), nblocks));
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace rqft
