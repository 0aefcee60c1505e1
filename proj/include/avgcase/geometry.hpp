#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "avgcase/common.hpp"
#include "avgcase/records.hpp"

namespace avgcase {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// Exact sign of the orientation determinant of (a, b, c): +1 when c lies left
// of the directed line a->b, -1 when right, 0 when collinear. A floating
// filter settles most calls; the rest are decided on an exact expansion.
int orientation(Point a, Point b, Point c) noexcept;

struct HullStats {
  std::uint64_t orientation_tests = 0;
};

// Strict convex hull: vertices counterclockwise from the lexicographically
// smallest, no three collinear. A single distinct point gives one vertex and
// a collinear set gives its two extremes.
class Hull {
 public:
  Hull() = default;

  // Builds from lower chain (ascending, both extremes) and upper chain
  // (descending, both extremes) as produced by a monotone-chain scan.
  static Hull from_chains(std::span<const Point> lower, std::span<const Point> upper);

  std::span<const Point> vertices() const noexcept { return ccw_; }
  // Same vertices in lexicographic (x, then y) order.
  std::span<const Point> sorted_by_x() const noexcept { return by_x_; }
  std::size_t size() const noexcept { return ccw_.size(); }
  bool empty() const noexcept { return ccw_.empty(); }

  // Inside or on the boundary, with exact predicates.
  bool contains(Point p) const noexcept;
  // Every consecutive vertex triple strictly counterclockwise.
  bool strictly_convex() const noexcept;

  friend bool operator==(const Hull&, const Hull&) = default;

 private:
  std::vector<Point> ccw_;
  std::vector<Point> by_x_;
};

// Monotone-chain hull of points already in lexicographic order (duplicates
// allowed). Linear in the input size.
Hull hull_of_sorted(std::span<const Point> sorted, HullStats* stats = nullptr);

// Linear merge of the two x-sorted vertex lists followed by hull_of_sorted.
Hull merge_hulls(const Hull& first, const Hull& second, HullStats* stats = nullptr);

// Splits by input position (not by coordinate) at n/2; brute force at n <= 5.
Hull hull_divide_conquer(std::span<const Point> points, HullStats* stats = nullptr);

inline constexpr std::size_t kBruteForceHullLimit = 2000;

// Cubic reference: a directed pair (p, q) is a hull edge when no point lies
// strictly right of it and collinear points lie between p and q.
Hull hull_bruteforce(std::span<const Point> points, HullStats* stats = nullptr);

std::vector<Point> uniform_points(std::size_t n, Rng& rng);

// One record per n: mean_hull_size and mean_hull_size_over_ln_n over
// `trials` uniform point sets.
std::vector<ExperimentRecord> hull_size_experiment(std::span<const std::size_t> ns, std::size_t trials,
                                                   std::uint64_t seed);

}  // namespace avgcase
