#pragma once

#include <cstddef>
#include <functional>

namespace cw {

// Worker count: CW_THREADS if set and positive, else the hardware concurrency.
int thread_count();

// Runs body(index) for index in [0, n), split into contiguous chunks across workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cw
