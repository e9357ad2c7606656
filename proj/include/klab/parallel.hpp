/**
 * @file parallel.hpp
 * @brief Static-chunk parallel loop. Callers write into per-index slots and
 *        reduce in index order, so results do not depend on the worker count.
 */
#pragma once

#include <cstddef>
#include <functional>

namespace klab {

/// Worker count: KLAB_THREADS if set and positive, else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n). The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace klab
