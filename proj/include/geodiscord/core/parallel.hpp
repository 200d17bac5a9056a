#pragma once

#include <cstddef>
#include <functional>

namespace geodiscord {

/// Worker count: GEODISCORD_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Calls body(i) for every i in [0, n). Iterations are split into
/// contiguous blocks, one per worker; body must only write to slot i of
/// its output. The first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace geodiscord
