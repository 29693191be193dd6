#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lrw {

/// All strictly increasing k-subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

/// Thread cap from WORKBENCH_THREADS (default: hardware concurrency).
unsigned thread_cap();

/// Runs fn(0..n-1); may use threads, results must be written to disjoint
/// slots so the outcome is identical to the sequential order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lrw
