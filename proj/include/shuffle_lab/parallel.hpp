#pragma once

#include <cstddef>
#include <functional>

namespace shuffle_lab {

// SHUFFLE_LAB_THREADS when set to a positive integer, else the hardware concurrency.
int default_threads();

// Runs body(i) for i in [0, count) on up to `threads` workers (0 = default_threads()).
// The first exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace shuffle_lab
