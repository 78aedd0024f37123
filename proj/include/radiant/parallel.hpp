#pragma once

#include <cstddef>
#include <functional>

namespace radiant {

/// Worker count for block-parallel loops: min(hardware, RADIANT_THREADS).
/// RADIANT_THREADS=1 disables threading; unparsable values fall back to
/// the hardware count.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Blocks are
/// assigned statically, so any deterministic per-index output stays
/// deterministic for every thread count.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace radiant
