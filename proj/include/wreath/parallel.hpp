#pragma once

#include <cstddef>
#include <functional>

namespace wreath {

// Worker count for parallelizable enumerations; the WREATH_CHARS_THREADS
// environment variable overrides the single-threaded default.
int worker_count();

// Runs fn(i) for every i in [0, count), spread over the workers.  Callers
// write to disjoint preallocated slots, so output assembly stays ordered.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace wreath
