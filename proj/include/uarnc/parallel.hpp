#pragma once

#include <cstddef>
#include <functional>

namespace uarnc {

/// Worker count to use: `requested` if positive, else UARNC_THREADS if set
/// to a positive integer, else the hardware concurrency.
int resolve_workers(int requested = 0);

/// Calls fn(i) for every i in [0, n) on up to `workers` threads. Results
/// must be written to index-addressed storage; callers fold them in index
/// order so output never depends on scheduling. The first exception thrown
/// by any call is rethrown after all threads join.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace uarnc
