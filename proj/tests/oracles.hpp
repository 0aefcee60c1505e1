#pragma once

// Slow reference implementations used only by the tests. None of them calls
// into the library code they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "avgcase/common.hpp"
#include "avgcase/geometry.hpp"
#include "avgcase/stopping.hpp"

namespace oracle {

// E[max] by enumerating the product of supports.
inline double expected_max(std::span<const avgcase::DiscreteDistribution> dists) {
  double total = 0.0;
  std::function<void(std::size_t, double, double)> walk = [&](std::size_t i, double prob, double best) {
    if (i == dists.size()) {
      total += prob * best;
      return;
    }
    for (const auto& atom : dists[i].support()) walk(i + 1, prob * atom.prob, std::max(best, atom.value));
  };
  walk(0, 1.0, -std::numeric_limits<double>::infinity());
  return total;
}

// Value of a per-stage threshold policy by enumerating every outcome sequence.
inline double policy_value(const avgcase::StoppingInstance& inst, const avgcase::Policy& policy) {
  const auto stages = inst.stages();
  double total = 0.0;
  std::function<void(std::size_t, double)> walk = [&](std::size_t i, double prob) {
    if (i == stages.size()) return;
    for (const auto& atom : stages[i].support()) {
      if (avgcase::passes(atom.value, policy.thresholds[i], policy.modes[i]))
        total += prob * atom.prob * atom.value;
      else
        walk(i + 1, prob * atom.prob);
    }
  };
  walk(0, 1.0);
  return total;
}

// Best value over every per-stage threshold drawn from the support union
// (plus 0 and +inf) and both accept modes. Optimal policies are of this form,
// so this equals the optimal value.
inline double best_policy_value(const avgcase::StoppingInstance& inst) {
  std::set<double> candidates = {0.0, std::numeric_limits<double>::infinity()};
  for (const auto& d : inst.stages())
    for (const auto& atom : d.support()) candidates.insert(atom.value);
  const std::vector<double> values(candidates.begin(), candidates.end());
  const std::size_t n = inst.size();
  avgcase::Policy policy{std::vector<double>(n), std::vector<avgcase::AcceptMode>(n)};
  double best = 0.0;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      best = std::max(best, oracle::policy_value(inst, policy));
      return;
    }
    for (double t : values)
      for (auto mode : {avgcase::AcceptMode::at_least, avgcase::AcceptMode::strictly_greater}) {
        policy.thresholds[i] = t;
        policy.modes[i] = mode;
        walk(i + 1);
      }
  };
  walk(0);
  return best;
}

// Comparisons of first-element-pivot QuickSort on a list, written recursively
// over copies.
inline std::uint64_t quicksort_comparisons(const std::vector<std::int64_t>& items) {
  if (items.size() < 2) return 0;
  std::vector<std::int64_t> lo, hi;
  for (std::size_t i = 1; i < items.size(); ++i) (items[i] < items[0] ? lo : hi).push_back(items[i]);
  return (items.size() - 1) + quicksort_comparisons(lo) + quicksort_comparisons(hi);
}

inline double distance(avgcase::Point a, avgcase::Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Shortest closed tour by trying every order of points 1..n-1.
inline double tsp_factorial(std::span<const avgcase::Point> pts) {
  const std::size_t n = pts.size();
  if (n < 2) return 0.0;
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), std::size_t{1});
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = distance(pts[0], pts[rest.front()]) + distance(pts[rest.back()], pts[0]);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) len += distance(pts[rest[i]], pts[rest[i + 1]]);
    best = std::min(best, len);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

// Orientation in plain doubles; exact only for coordinates on a coarse dyadic
// grid, which is all the hull oracle is used with.
inline int grid_orientation(avgcase::Point a, avgcase::Point b, avgcase::Point c) {
  const double d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (d > 0) - (d < 0);
}

inline bool on_segment(avgcase::Point p, avgcase::Point a, avgcase::Point b) {
  return grid_orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool in_triangle(avgcase::Point p, avgcase::Point a, avgcase::Point b, avgcase::Point c) {
  const int o1 = grid_orientation(a, b, p), o2 = grid_orientation(b, c, p), o3 = grid_orientation(c, a, p);
  const bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  const bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  return !(has_neg && has_pos);
}

// Strict hull vertices as a sorted set: p is a vertex iff it is not in the
// closed convex hull of the other distinct points, tested over every segment
// and triangle of those points. Cubic-to-quartic; grid coordinates only.
inline std::vector<avgcase::Point> hull_vertex_set(std::span<const avgcase::Point> input) {
  std::vector<avgcase::Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<avgcase::Point> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < n && !covered; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < n && !covered; ++b) {
        if (b == i) continue;
        if (on_segment(pts[i], pts[a], pts[b])) covered = true;
        for (std::size_t c = b + 1; c < n && !covered; ++c) {
          if (c == i) continue;
          if (grid_orientation(pts[a], pts[b], pts[c]) != 0 && in_triangle(pts[i], pts[a], pts[b], pts[c]))
            covered = true;
        }
      }
    }
    if (!covered) out.push_back(pts[i]);
  }
  return out;
}

// Random points on a (1/resolution)-spaced grid in the unit square.
inline std::vector<avgcase::Point> grid_points(std::size_t n, std::uint64_t resolution, avgcase::Rng& rng) {
  std::vector<avgcase::Point> pts(n);
  const double step = 1.0 / static_cast<double>(resolution);
  for (auto& p : pts) {
    p.x = static_cast<double>(rng.uniform_index(resolution + 1)) * step;
    p.y = static_cast<double>(rng.uniform_index(resolution + 1)) * step;
  }
  return pts;
}

}  // namespace oracle
