#pragma once

#include <cstddef>
#include <functional>

namespace bfk {

// Process-wide cap on worker threads used by the library; 0 means
// std::thread::hardware_concurrency().
void set_thread_limit(unsigned n);
unsigned thread_limit();

// Calls body(i) for i in [0, n), spread over up to thread_limit() threads in
// contiguous blocks. Results must be written to disjoint slots so the outcome
// is independent of the thread count. The first exception thrown by any body
// is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bfk
