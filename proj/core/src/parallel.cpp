#include "radfield/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace radfield {

namespace {

std::atomic<int> g_threads{0};  // 0 = use hardware concurrency

constexpr std::size_t kBlock = 4096;

int effective_threads() {
  int n = g_threads.load(std::memory_order_relaxed);
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void set_num_threads(int n) { g_threads.store(n > 0 ? n : 0, std::memory_order_relaxed); }

int num_threads() { return effective_threads(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  const int workers = std::min<std::size_t>(effective_threads(), nblocks);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks) return;
      std::size_t lo = b * kBlock;
      std::size_t hi = std::min(lo + kBlock, n);
      fn(lo, hi);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

double parallel_reduce(std::size_t n,
                       const std::function<double(std::size_t, std::size_t)>& fn) {
  if (n == 0) return 0.0;
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nblocks, 0.0);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    // chunks produced by parallel_for are exactly the kBlock-aligned blocks
    partial[lo / kBlock] = fn(lo, hi);
  });
  double sum = 0.0;
  for (double v : partial) sum += v;
  return sum;
}

}  // namespace radfield
