#pragma once

#include <cstdint>
#include <functional>

namespace horocave {

/// Worker-pool width: HOROCAVE_THREADS when set (positive integer), else the
/// hardware concurrency. ConfigError on a malformed value.
int worker_count();

/// Runs fn(i) for i in [0, n) on the worker pool. Results must be written to
/// index-addressed storage; the call returns after all indices complete, so
/// downstream emission order stays deterministic. Exceptions are rethrown on
/// the calling thread.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace horocave
