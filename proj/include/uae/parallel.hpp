#pragma once
// Deterministic data parallelism for oracle sweeps: fn(i) runs for every
// i < n, partitioned across worker threads. Callers write results into
// preallocated slots indexed by i, so the assembled output never depends on
// the thread count. Width comes from UAE_JOBS, defaulting to the hardware
// concurrency clamped to [1, 8].
#include <cstddef>
#include <functional>

namespace uae {

std::size_t parallel_width();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace uae
