#pragma once

#include <cstdint>
#include <functional>

namespace sqz {

// Runs fn(i) for i in [0, n). n_threads <= 0 picks hardware concurrency,
// 1 runs inline. Work items must write only to slots keyed by their own i,
// which keeps results identical for every thread count and schedule. The
// first exception thrown by a worker is rethrown after all workers join.
void parallel_for(std::int64_t n, int n_threads, const std::function<void(std::int64_t)>& fn);

}  // namespace sqz
