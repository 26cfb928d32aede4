#pragma once

#include <cstddef>
#include <functional>

namespace kzk {

// Process-wide worker count for the linear-algebra kernels. 1 = serial.
// Results are identical for every setting; only wall time changes.
void set_thread_count(int threads);
int thread_count();

// Runs fn(i) for i in [0, n). Work items must write only to their own
// output slots; iteration order is unspecified when threads > 1. Nested
// calls run serially to avoid oversubscription.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace kzk
