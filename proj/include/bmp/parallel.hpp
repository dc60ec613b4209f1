#pragma once

#include <cstddef>
#include <functional>

namespace bmp {

/// Number of worker threads: hardware concurrency, optionally capped by the
/// BMP_THREADS environment variable. Always at least 1.
std::size_t worker_count();

/// Runs fn(begin, end) over fixed-size chunks of [0, n). Chunk boundaries do
/// not depend on the thread count, so reductions that combine per-chunk
/// results in chunk order are bitwise reproducible.
void parallel_chunks(std::size_t n, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace bmp
