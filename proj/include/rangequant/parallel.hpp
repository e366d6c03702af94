#pragma once

#include <cstddef>
#include <functional>

namespace rangequant {

// Worker cap: RANGEQUANT_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

// Runs body(i) for i in [0, n). Indices are partitioned into contiguous
// blocks; the first exception thrown by any worker is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rangequant
