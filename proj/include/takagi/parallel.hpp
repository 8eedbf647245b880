#pragma once

#include <cstddef>
#include <functional>

namespace takagi {

/// Worker count: the TAKAGI_THREADS environment variable clamped to
/// [1, hardware_concurrency], defaulting to the hardware count.
int worker_count();

/// Runs fn(i) for i in [0, n) on worker_count() threads, blocks of
/// contiguous indices per thread.  Results must be written to disjoint
/// slots keyed by i so the outcome is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace takagi
