#pragma once

#include <functional>

namespace lcstat {

// Worker cap: min(hardware, LCSTAT_THREADS) with LCSTAT_THREADS >= 1.
int max_threads();

// Run fn(chunk) for chunk = 0..n_chunks-1 on a small thread pool.  Chunk
// outputs must be stored per chunk by the caller and reduced in chunk order
// so results do not depend on the thread count.
void parallel_chunks(int n_chunks, const std::function<void(int)>& fn);

}  // namespace lcstat
