#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rqft {

// Pairwise (tree) summation. All accumulations that feed reported values go
// through this so that results do not depend on how work was chunked across
// threads.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  const std::size_t n = v.size();
  if (n == 0) return T{};
  if (n <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

// Streaming pairwise accumulator: values are buffered in fixed-size blocks,
// each block is tree-summed, and block sums are tree-summed at the end. The
// result depends only on the sequence order, never on flush timing.
template <typename T>
class PairwiseAccumulator {
 public:
  explicit PairwiseAccumulator(std::size_t block = 4096) : block_(block) {
    buf_.reserve(block_);
  }

  void add(const T& x) {
    buf_.push_back(x);
    if (buf_.size() == block_) flush();
  }

  T total() {
    flush();
    return pairwise_sum(blocks_);
  }

 private:
  void flush() {
    if (buf_.empty()) return;
    blocks_.push_back(pairwise_sum(buf_));
    buf_.clear();
  }

  std::size_t block_;
  std::vector<T> buf_;
  std::vector<T> blocks_;
};

// Number of worker threads used by parallel_for_blocks. 0 = hardware.
void set_thread_count(int n);
int thread_count();

// Runs fn(block) for block in [0, nblocks). Each block writes to its own
// output slot, so the combination step is thread-count independent.
void parallel_for_blocks(std::size_t nblocks,
                         const std::function<void(std::size_t)>& fn);

}  // namespace rqft
