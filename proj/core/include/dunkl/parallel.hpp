// Deterministic work partitioning: a fixed chunking per index range, so results
// are identical for any worker count.  DUNKL_WORKERS caps the pool.
#pragma once

#include <functional>

namespace dunkl {

// Effective worker count: min(hardware, DUNKL_WORKERS if set), at least 1.
int worker_count();

// Runs fn(i) for i in [0, n).  Each index writes only its own slots, so the
// result never depends on the worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace dunkl
