#pragma once

#include <cstddef>
#include <functional>

namespace fusionkit {

/// Worker count: FUSIONKIT_THREADS if set (>= 1), else the hardware concurrency.
std::size_t thread_budget();

/// Runs body(begin, end) over disjoint chunks of [0, n). Each index is handled by exactly one
/// call, so per-index results are independent of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 4096);

}  // namespace fusionkit
