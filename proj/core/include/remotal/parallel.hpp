#pragma once

#include <cstddef>
#include <functional>

namespace remotal {

// Worker cap: REMOTAL_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Calls body(i) for i in [0, n) across up to worker_count() threads. Results
// must be written to per-index slots; the first exception thrown by any
// body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace remotal
