#pragma once

#include <cstddef>
#include <functional>

namespace fuscat {

/// Worker count from FUSCAT_PARALLEL, or 1 when unset or invalid.
int default_workers();

/// Runs fn(0..n-1) on up to `workers` threads. Callers write results into
/// per-index slots, so output order never depends on scheduling. The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace fuscat
