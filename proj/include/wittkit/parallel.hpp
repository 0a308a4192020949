#pragma once

#include <cstddef>
#include <functional>

namespace wittkit {

// Worker count: WITTKIT_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t thread_count();

// Runs fn(0..n-1) on up to thread_count() threads. Each index is processed
// exactly once; the first exception thrown is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wittkit
