#pragma once

#include <cstddef>
#include <functional>

namespace specrange {

// Worker count from SPECRANGE_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

// Runs body(i) for i in [0, count) on up to worker_count() threads. Each index
// is visited exactly once; body must not share mutable state across indices.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace specrange
