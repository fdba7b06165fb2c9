#pragma once

#include <future>
#include <thread>
#include <vector>

namespace powerful {

inline unsigned default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Splits [0, n) into per-thread chunks and collects one result per chunk, in
// chunk order, so merges stay deterministic regardless of thread count.
template <class R, class Fn>
std::vector<R> parallel_map_chunks(size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = default_thread_count();
  if (threads > n) threads = n ? (unsigned)n : 1;
  if (threads <= 1) {
    std::vector<R> out;
    if (n) out.push_back(fn(0, n));
    return out;
  }
  size_t chunk = (n + threads - 1) / threads;
  std::vector<std::future<R>> futures;
  for (size_t begin = 0; begin < n; begin += chunk) {
    size_t end = std::min(n, begin + chunk);
    futures.push_back(std::async(std::launch::async, [begin, end, &fn] { return fn(begin, end); }));
  }
  std::vector<R> out;
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace powerful
