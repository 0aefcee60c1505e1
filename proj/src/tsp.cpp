#include "avgcase/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "avgcase/parallel.hpp"

namespace avgcase {

namespace {

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

bool is_permutation_of(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

double tour_length(std::span<const Point> points, std::span<const std::size_t> order) {
  if (!is_permutation_of(order, points.size()))
    throw std::invalid_argument("tour order is not a permutation of the points");
  if (order.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i)
    total += distance(points[order[i]], points[order[(i + 1) % order.size()]]);
  return total;
}

Tour held_karp(std::span<const Point> points) {
  const std::size_t k = points.size();
  if (k > kHeldKarpLimit)
    throw std::length_error("held_karp supports at most " + std::to_string(kHeldKarpLimit) + " points");
  Tour tour;
  tour.order.resize(k);
  std::iota(tour.order.begin(), tour.order.end(), std::size_t{0});
  if (k < 2) return tour;
  if (k <= 3) {
    tour.length = tour_length(points, tour.order);
    return tour;
  }

  // Point 0 is the fixed start; the others are bits 0..m-1.
  const std::size_t m = k - 1;
  std::vector<double> dist(m * m);
  std::vector<double> from_start(m);
  for (std::size_t i = 0; i < m; ++i) {
    from_start[i] = distance(points[0], points[i + 1]);
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = distance(points[i + 1], points[j + 1]);
  }

  const std::size_t full = (std::size_t{1} << m) - 1;
  thread_local std::vector<double> dp;
  dp.assign((full + 1) * m, std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = from_start[j];

  for (std::size_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    double* row = &dp[mask * m];
    for (std::size_t rest = mask; rest; rest &= rest - 1) {
      const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(rest));
      const std::size_t prev = mask ^ (std::size_t{1} << j);
      const double* prev_row = &dp[prev * m];
      const double* to_j = &dist[j * m];
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t bits = prev; bits; bits &= bits - 1) {
        const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(bits));
        const double cand = prev_row[i] + to_j[i];
        if (cand < best) best = cand;
      }
      row[j] = best;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  std::size_t last = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double cand = dp[full * m + j] + from_start[j];
    if (cand < best) {
      best = cand;
      last = j;
    }
  }

  // Walk the optimal path backwards, matching the stored values exactly.
  std::vector<std::size_t> reversed;
  std::size_t mask = full;
  std::size_t j = last;
  for (;;) {
    reversed.push_back(j + 1);
    const std::size_t prev = mask ^ (std::size_t{1} << j);
    if (prev == 0) break;
    const double target = dp[mask * m + j];
    std::size_t chosen = m;
    for (std::size_t bits = prev; bits; bits &= bits - 1) {
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(bits));
      if (dp[prev * m + i] + dist[j * m + i] == target) {
        chosen = i;
        break;
      }
    }
    mask = prev;
    j = chosen;
  }
  tour.order.assign(1, 0);
  tour.order.insert(tour.order.end(), reversed.rbegin(), reversed.rend());
  tour.length = tour_length(points, tour.order);
  return tour;
}

std::size_t GridDissection::dimension(std::size_t n) {
  if (n < 3) return 1;
  const double nd = static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(std::sqrt(nd / std::log(nd))));
}

GridDissection GridDissection::build(std::span<const Point> points) {
  GridDissection grid;
  grid.g = dimension(points.size());
  const std::size_t g = grid.g;
  grid.cells.assign(g * g, {});
  grid.cell_of.resize(points.size());
  auto coord = [g](double v) {
    const double scaled = std::floor(v * static_cast<double>(g));
    if (!(scaled > 0.0)) return std::size_t{0};
    return std::min(static_cast<std::size_t>(scaled), g - 1);
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t cell = coord(points[i].y) * g + coord(points[i].x);
    grid.cell_of[i] = cell;
    grid.cells[cell].push_back(i);
  }
  return grid;
}

std::size_t GridDissection::max_occupancy() const noexcept {
  std::size_t best = 0;
  for (const auto& c : cells) best = std::max(best, c.size());
  return best;
}

double stitch_exact_cell_limit(std::size_t n) {
  return std::min(6.0 * std::log2(static_cast<double>(n)), static_cast<double>(kHeldKarpLimit));
}

StitchResult stitch_detailed(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("stitch needs at least 3 points");
  StitchResult result;
  result.grid = GridDissection::build(points);
  const std::size_t g = result.grid.g;
  const double exact_limit = stitch_exact_cell_limit(n);

  // Serpentine order: left to right on even rows (from the bottom), right to
  // left on odd rows.
  std::vector<std::size_t> cell_order;
  for (std::size_t row = 0; row < g; ++row) {
    for (std::size_t step = 0; step < g; ++step) {
      const std::size_t col = row % 2 == 0 ? step : g - 1 - step;
      const std::size_t cell = row * g + col;
      if (!result.grid.cells[cell].empty()) cell_order.push_back(cell);
    }
  }

  std::vector<Point> local;
  result.tour.order.reserve(n);
  for (std::size_t c = 0; c < cell_order.size(); ++c) {
    const auto& members = result.grid.cells[cell_order[c]];
    result.representative_order.push_back(members.front());
    std::vector<std::size_t> sub;
    if (static_cast<double>(members.size()) <= exact_limit) {
      local.clear();
      for (std::size_t i : members) local.push_back(points[i]);
      for (std::size_t li : held_karp(local).order) sub.push_back(members[li]);
      ++result.exact_cells;
    } else {
      sub = members;
      std::stable_sort(sub.begin(), sub.end(),
                       [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
      std::rotate(sub.begin(), std::find(sub.begin(), sub.end(), members.front()), sub.end());
      ++result.fallback_cells;
    }
    // A subtour may be walked either way round; leave towards the next
    // representative from whichever neighbour of ours is closer to it.
    const Point next = points[result.grid.cells[cell_order[(c + 1) % cell_order.size()]].front()];
    if (sub.size() > 2 && distance(points[sub[1]], next) < distance(points[sub.back()], next))
      std::reverse(sub.begin() + 1, sub.end());
    result.tour.order.insert(result.tour.order.end(), sub.begin(), sub.end());
  }

  result.tour.length = tour_length(points, result.tour.order);
  double rep_length = 0.0;
  const auto& reps = result.representative_order;
  if (reps.size() >= 2)
    for (std::size_t i = 0; i < reps.size(); ++i)
      rep_length += distance(points[reps[i]], points[reps[(i + 1) % reps.size()]]);
  result.representative_length = rep_length;
  return result;
}

Tour stitch(std::span<const Point> points) { return stitch_detailed(points).tour; }

std::vector<ExperimentRecord> sqrt_n_lower_bound_experiment(std::size_t n, std::size_t trials,
                                                            std::uint64_t seed, bool with_oracle,
                                                            std::uint64_t sweep_index) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (with_oracle && n > 14) throw std::invalid_argument("the Held-Karp oracle is limited to n <= 14");

  std::vector<ExperimentRecord> records(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(seed, trial_stream(sweep_index, t));
    const std::vector<Point> points = uniform_points(n, rng);
    const StitchResult s = stitch_detailed(points);
    ExperimentRecord& r = records[t];
    r.experiment = "tsp";
    r.seed = seed;
    r.param("n", std::to_string(n)).param("trial", std::to_string(t));
    r.stat("stitch_length", s.tour.length);
    r.stat("length_over_sqrt_n", s.tour.length / std::sqrt(static_cast<double>(n)));
    r.stat("max_cell_occupancy", static_cast<double>(s.grid.max_occupancy()));
    r.stat("occupancy_bound", 6.0 * std::log2(static_cast<double>(n)));
    r.stat("representative_length", s.representative_length);
    if (with_oracle) r.stat("oracle_length", held_karp(points).length);
  });
  return records;
}

}  // namespace avgcase
