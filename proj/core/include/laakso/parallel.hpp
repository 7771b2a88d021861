#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace laakso {

// Worker count: LAAKSO_THREADS if set and positive, else the hardware count.
unsigned thread_count();

// Runs fn(i) for i in [0, n) on up to thread_count() threads. Each index is
// handled exactly once, so writes to slot i of a presized output stay
// deterministic. The first exception (lowest index) is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace laakso
