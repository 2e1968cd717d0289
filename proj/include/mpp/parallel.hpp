#ifndef MPP_PARALLEL_HPP
#define MPP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace mpp {

/// Worker count: MPP_THREADS if set to a positive integer, else the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads.
/// The first exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mpp

#endif
