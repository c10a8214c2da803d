#pragma once

#include <cstddef>
#include <functional>

namespace dunkl {

/// Worker count: DUNKL_THREADS if set to a positive integer, else the hardware concurrency.
int thread_count();

/// Runs body(begin, end) over a static contiguous partition of [0, n). Each index is
/// handled by exactly one call, so results written per index do not depend on the
/// thread count. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace dunkl
