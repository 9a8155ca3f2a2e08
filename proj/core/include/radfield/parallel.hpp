#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace radfield {

// Global worker count for data-parallel loops. Thread count never changes
// results: work is split into fixed-size blocks and reductions are summed
// in block order, so outputs are bit-identical for any thread count.
void set_num_threads(int n);
int num_threads();

// Invokes fn(begin, end) over disjoint chunks covering [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

// Sum of fn(begin, end) over chunks, accumulated in chunk order.
double parallel_reduce(std::size_t n,
                       const std::function<double(std::size_t, std::size_t)>& fn);

}  // namespace radfield
