#pragma once

#include <cstddef>
#include <functional>

namespace wedge::threads {

/// Process-wide worker count for parallel_for; 0 = hardware concurrency.
/// Results of all library operations are bit-identical for any setting:
/// workers own disjoint index ranges and never reduce across threads.
void set_worker_count(unsigned n);
unsigned worker_count();

/// Run body(i) for i in [0, n); each index is executed exactly once.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wedge::threads
