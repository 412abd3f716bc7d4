#pragma once

#include <functional>

namespace bisite {

// Effective worker count: `requested` if positive, else the BISITE_THREADS
// environment variable, else hardware concurrency.
int resolve_threads(int requested = 0);

// Run fn(i) for i in [begin, end), split into contiguous blocks across
// `threads` workers. Writes must target disjoint locations per index; block
// assignment is fixed, so results are independent of scheduling.
void parallel_for(int begin, int end, int threads, const std::function<void(int)>& fn);

}  // namespace bisite
