#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace nsfr {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidMeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InadmissibleStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StepFailureError : std::runtime_error {
  StepFailureError(const std::string& what, double time)
      : std::runtime_error(what), t(time) {}
  double t;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Chunked element-parallel loop. Each index must write disjoint data so the
/// result is independent of the worker count.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  const int nw = std::min(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += nw) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace nsfr
