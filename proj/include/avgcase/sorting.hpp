#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace avgcase {

struct SortTrace {
  std::vector<std::int64_t> sorted;
  std::uint64_t comparisons = 0;
};

// QuickSort that always pivots on the first element of the current range.
// Partitioning is a single stable left-to-right pass, so every non-pivot
// element is compared with the pivot exactly once and subranges keep their
// input order. Throws std::invalid_argument on duplicate elements.
SortTrace quicksort_first_pivot(std::span<const std::int64_t> input);

// Sum over value pairs i < j of 2/(j-i+1): the mean comparison count of
// quicksort_first_pivot over uniformly random permutations of n elements.
double expected_comparisons_exact(std::size_t n);

}  // namespace avgcase
