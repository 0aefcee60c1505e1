#include "avgcase/sorting.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace avgcase {

SortTrace quicksort_first_pivot(std::span<const std::int64_t> input) {
  SortTrace trace;
  trace.sorted.assign(input.begin(), input.end());
  {
    std::vector<std::int64_t> check(input.begin(), input.end());
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
      throw std::invalid_argument("quicksort_first_pivot requires distinct elements");
  }

  std::vector<std::int64_t>& buf = trace.sorted;
  std::vector<std::int64_t> greater;
  // Explicit stack of [lo, hi) ranges; sorted input would otherwise recurse n deep.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  ranges.emplace_back(0, buf.size());
  while (!ranges.empty()) {
    const auto [lo, hi] = ranges.back();
    ranges.pop_back();
    if (hi - lo < 2) continue;

    const std::int64_t pivot = buf[lo];
    std::size_t write = lo;
    greater.clear();
    for (std::size_t i = lo + 1; i < hi; ++i) {
      ++trace.comparisons;
      if (buf[i] < pivot)
        buf[write++] = buf[i];
      else
        greater.push_back(buf[i]);
    }
    const std::size_t pivot_pos = write;
    buf[pivot_pos] = pivot;
    std::copy(greater.begin(), greater.end(), buf.begin() + static_cast<std::ptrdiff_t>(pivot_pos + 1));

    ranges.emplace_back(pivot_pos + 1, hi);
    ranges.emplace_back(lo, pivot_pos);
  }
  return trace;
}

double expected_comparisons_exact(std::size_t n) {
  // Pairs at value distance d number n - d, each compared with probability 2/(d+1).
  double total = 0.0;
  for (std::size_t d = 1; d < n; ++d)
    total += 2.0 * static_cast<double>(n - d) / static_cast<double>(d + 1);
  return total;
}

}  // namespace avgcase
