#pragma once

#include <cstddef>
#include <functional>

namespace tjcm {

// Worker cap: THERMAL_JCM_THREADS when set (clamped to >= 1), otherwise
// hardware concurrency.
int max_threads();

// Runs fn(0..count-1) across worker threads. Callers write results into
// per-index slots, so output order never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace tjcm
