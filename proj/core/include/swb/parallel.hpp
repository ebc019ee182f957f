#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace swb {

/// Worker count: SWB_WORKERS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
/// is handled exactly once; the first exception (lowest index) is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Deterministic parallel map: result[i] = f(i) regardless of scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace swb
