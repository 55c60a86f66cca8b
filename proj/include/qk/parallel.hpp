#pragma once

#include <cstddef>
#include <functional>

namespace qk {

/// Worker count from QK_THREADS (unset or 0 means hardware concurrency).
std::size_t thread_count();

/// Runs body(0) .. body(n-1) on up to thread_count() threads. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace qk
