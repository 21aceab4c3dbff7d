#pragma once

#include <functional>

namespace drglab {

// Worker count: DRGLAB_THREADS if set (clamped to >= 1), else hardware
// concurrency.
int thread_cap();

// Runs fn(0..n-1) across up to thread_cap() workers. Blocks until done; the
// first exception thrown by any worker is rethrown. fn must be safe to call
// concurrently for distinct indices.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace drglab
