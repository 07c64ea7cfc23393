#pragma once

#include <cstddef>
#include <functional>

namespace toric {

// Worker count for the OpenMP kernels. Default 1 runs the serial reference
// paths; results are identical for any value.
void set_jobs(int n);
int jobs();

// Runs fn(i) for i in [0, n). With jobs() > 1 iterations are distributed
// over OpenMP threads; fn must only write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace toric
