#pragma once

#include <functional>

namespace vaoi {

/// Runs body(0..count-1) on a small worker pool.
///
/// workers == 0 picks the hardware concurrency (clamped to count); workers
/// == 1 degenerates to a plain loop. Work items are claimed from an atomic
/// counter, so callers that write results into per-index slots and reduce
/// after the join get identical output for any worker count. The first
/// exception thrown by a body is rethrown on the calling thread.
void parallel_for(int count, int workers, const std::function<void(int)>& body);

}  // namespace vaoi
