#pragma once

#include <cstddef>
#include <functional>

namespace circ::detail {

// Worker count for internal sweeps: the number of logical cores, capped by
// the CIRC_SPECTRA_THREADS environment variable when set.
unsigned worker_count();

// Runs fn(0..count-1) across `workers` threads. Work items must write only to
// their own slots; results are then independent of the thread count. The
// first exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace circ::detail
