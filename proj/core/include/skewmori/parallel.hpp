#pragma once

#include <cstddef>
#include <functional>

namespace skewmori {

// Worker count: SKEWMORI_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t thread_limit();

// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
// thread_limit()). Callers write results into slot i, so the outcome does not
// depend on scheduling. The first exception thrown by a task is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

}  // namespace skewmori
