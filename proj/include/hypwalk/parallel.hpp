#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hypwalk {

inline constexpr std::int64_t kBlockSamples = 1024;

inline unsigned resolve_workers(unsigned workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Runs fn(begin, end) over fixed blocks of the sample range and merges the block
// results in block order, so the outcome does not depend on the worker count.
template <class Acc, class Fn>
Acc run_blocks(std::int64_t samples, unsigned workers, Fn fn) {
  const std::int64_t nblocks = (samples + kBlockSamples - 1) / kBlockSamples;
  std::vector<Acc> parts(static_cast<std::size_t>(nblocks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&]() {
    for (;;) {
      std::int64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      try {
        std::int64_t lo = b * kBlockSamples, hi = std::min(samples, lo + kBlockSamples);
        parts[static_cast<std::size_t>(b)] = fn(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        next = nblocks;
      }
    }
  };
  unsigned w = std::min<std::int64_t>(resolve_workers(workers), std::max<std::int64_t>(nblocks, 1));
  if (w <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < w; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  Acc total{};
  for (auto& p : parts) total.merge(p);
  return total;
}

// Vector accumulator concatenating per-block results in order.
template <class T>
struct Collected {
  std::vector<T> values;
  void merge(const Collected& o) { values.insert(values.end(), o.values.begin(), o.values.end()); }
};

}  // namespace hypwalk
