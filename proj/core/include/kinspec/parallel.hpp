#pragma once

#include <cstddef>
#include <functional>

namespace kinspec {

/// Splits [0, count) into `workers` contiguous chunks and runs
/// body(begin, end, worker) on each, one thread per chunk. Chunk boundaries
/// depend only on (count, workers). Rethrows the first exception.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t, std::size_t, int)>& body);

}  // namespace kinspec
