#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "avgcase/common.hpp"

namespace avgcase {

// Slack allowed on a bin's total size to absorb floating-point summation.
inline constexpr double kBinCapacityTolerance = 1e-12;

class PackingInstance {
 public:
  PackingInstance() = default;
  explicit PackingInstance(std::vector<double> sizes);

  std::span<const double> sizes() const noexcept { return sizes_; }
  std::size_t size() const noexcept { return sizes_.size(); }
  double total_size() const noexcept;

 private:
  std::vector<double> sizes_;
};

// bins[b] lists item indices of the instance.
struct Packing {
  std::vector<std::vector<std::size_t>> bins;

  std::size_t bin_count() const noexcept { return bins.size(); }
};

// First-fit decreasing. Items are taken in nonincreasing size (ties by
// index) and placed in the lowest-indexed bin that still fits.
Packing ffd(const PackingInstance& inst);

// Truncate and match: items of size >= 1 - 2/n^{1/4} go alone; the rest,
// sorted descending, pair i-th largest with i-th smallest when they fit. An
// odd middle item goes alone.
Packing truncate_match(const PackingInstance& inst);

double truncate_match_cutoff(std::size_t n);

// ceil(total size), with the same tolerance bins get.
std::size_t size_lower_bound(const PackingInstance& inst);

// 6 x (1/2+eps), 6 x (1/4+2eps), 6 x (1/4+eps), 12 x (1/4-2eps); 0 < eps < 1/100.
PackingInstance exercise3_instance(double eps);

// The 9-bin packing of exercise3_instance(eps).
Packing exercise3_witness(double eps);

bool validate_packing(const PackingInstance& inst, const Packing& packing);

PackingInstance uniform_instance(std::size_t n, Rng& rng);

}  // namespace avgcase
