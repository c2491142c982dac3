#pragma once

#include <cstdint>
#include <functional>

namespace dressage {

/// Worker cap: DRESSAGE_THREADS if set (clamped to >= 1), else the hardware
/// concurrency. Read once per process.
int max_threads();

/// Runs fn(begin, end) over [0, n) split into fixed-size blocks. Blocks are
/// independent writes only; reductions stay serial and compensated, so
/// results are identical for every thread count.
void parallel_for_blocks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

} // namespace dressage
