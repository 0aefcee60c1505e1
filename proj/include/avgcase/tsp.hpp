#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "avgcase/geometry.hpp"
#include "avgcase/records.hpp"

namespace avgcase {

struct Tour {
  std::vector<std::size_t> order;
  double length = 0.0;
};

// Closed-tour length, including the edge back to order.front(). Throws
// std::invalid_argument unless order is a permutation of the point indices.
double tour_length(std::span<const Point> points, std::span<const std::size_t> order);

bool is_permutation_of(std::span<const std::size_t> order, std::size_t n);

inline constexpr std::size_t kHeldKarpLimit = 20;

// Exact optimal tour by dynamic programming over (subset, last point) with
// point 0 as the fixed start. O(k^2 2^k) time. n < 2 gives a zero-length tour.
Tour held_karp(std::span<const Point> points);

// g x g grid over the unit square with g = ceil(sqrt(n / ln n)). Point i lies
// in cell row * g + col, row = floor(y g), col = floor(x g), clamped to g-1.
struct GridDissection {
  std::size_t g = 0;
  std::vector<std::size_t> cell_of;
  std::vector<std::vector<std::size_t>> cells;  // ascending point indices

  static GridDissection build(std::span<const Point> points);
  static std::size_t dimension(std::size_t n);
  std::size_t max_occupancy() const noexcept;
};

struct StitchResult {
  Tour tour;
  GridDissection grid;
  // Boustrophedon tour over cell representatives.
  std::vector<std::size_t> representative_order;
  double representative_length = 0.0;
  std::size_t exact_cells = 0;
  std::size_t fallback_cells = 0;
};

// Exact tour in each cell with at most min(6 log2 n, 20) points, (x, y)-sorted
// order otherwise; cells are chained in serpentine row order, each subtour
// rotated to start at its lowest-index point.
StitchResult stitch_detailed(std::span<const Point> points);
Tour stitch(std::span<const Point> points);

double stitch_exact_cell_limit(std::size_t n);

// One record per trial: stitch_length, length_over_sqrt_n, max_cell_occupancy,
// representative_length, and oracle_length when with_oracle is set (n <= 14).
std::vector<ExperimentRecord> sqrt_n_lower_bound_experiment(std::size_t n, std::size_t trials,
                                                            std::uint64_t seed, bool with_oracle = false,
                                                            std::uint64_t sweep_index = 0);

}  // namespace avgcase
