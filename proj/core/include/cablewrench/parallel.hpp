#pragma once

#include <cstddef>
#include <functional>

namespace cablewrench {

/// Number of workers actually used for a request of `requested` threads
/// (0 means "use hardware concurrency", clamped to at least 1).
int resolve_thread_count(int requested);

/// Runs fn(i) for i in [0, n) split into contiguous blocks, one per worker.
/// Every worker writes only to its own output slots, so results are identical
/// for any worker count; scheduling never reorders observable output.
/// Exceptions thrown by fn are captured and the first one (by index block)
/// is rethrown on the calling thread.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace cablewrench
