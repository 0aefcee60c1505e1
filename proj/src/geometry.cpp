#include "avgcase/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "avgcase/parallel.hpp"

namespace avgcase {

namespace {

// Knuth's two-sum: a + b == sum + err exactly.
inline void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double bv = sum - a;
  const double av = sum - bv;
  err = (a - av) + (b - bv);
}

// a * b == prod + err exactly, barring underflow.
inline void two_product(double a, double b, double& prod, double& err) {
  prod = a * b;
  err = std::fma(a, b, -prod);
}

// Exact sign of a sum of doubles via a nonoverlapping expansion
// (Shewchuk's grow-expansion with zero elimination).
template <std::size_t N>
int exact_sum_sign(const std::array<double, N>& terms) {
  std::array<double, N + 1> expansion{};
  std::size_t length = 0;
  for (double term : terms) {
    double q = term;
    std::size_t out = 0;
    for (std::size_t i = 0; i < length; ++i) {
      double sum, err;
      two_sum(q, expansion[i], sum, err);
      if (err != 0.0) expansion[out++] = err;
      q = sum;
    }
    if (q != 0.0) expansion[out++] = q;
    length = out;
  }
  if (length == 0) return 0;
  return expansion[length - 1] > 0.0 ? 1 : -1;
}

int orientation_exact(Point a, Point b, Point c) {
  // (bx-ax)(cy-ay) - (by-ay)(cx-ax) expanded into six exact products.
  std::array<double, 12> terms{};
  auto product = [&](std::size_t slot, double u, double v, bool negate) {
    double p, e;
    two_product(u, v, p, e);
    terms[slot] = negate ? -p : p;
    terms[slot + 1] = negate ? -e : e;
  };
  product(0, b.x, c.y, false);
  product(2, b.x, a.y, true);
  product(4, a.x, c.y, true);
  product(6, b.y, c.x, true);
  product(8, a.x, b.y, false);
  product(10, a.y, c.x, false);
  return exact_sum_sign(terms);
}

inline int counted_orientation(Point a, Point b, Point c, HullStats* stats) {
  if (stats) ++stats->orientation_tests;
  return orientation(a, b, c);
}

}  // namespace

int orientation(Point a, Point b, Point c) noexcept {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  // Error bound for the float evaluation of this determinant form.
  constexpr double kEps = 0x1.0p-53;
  constexpr double kErrBound = (3.0 + 16.0 * kEps) * kEps;
  const double magnitude = std::abs(left) + std::abs(right);
  if (det > kErrBound * magnitude) return 1;
  if (-det > kErrBound * magnitude) return -1;
  if (magnitude == 0.0 && det == 0.0) {
    // Both products vanish; the differences may still have been rounded.
    if ((b.x == a.x || c.y == a.y) && (b.y == a.y || c.x == a.x)) return 0;
  }
  return orientation_exact(a, b, c);
}

Hull Hull::from_chains(std::span<const Point> lower, std::span<const Point> upper) {
  Hull h;
  if (lower.empty()) return h;
  if (lower.size() == 1) {
    h.ccw_ = {lower.front()};
    h.by_x_ = h.ccw_;
    return h;
  }
  // Both chains run between the same extremes; drop the shared endpoints of
  // the upper chain.
  h.ccw_.assign(lower.begin(), lower.end());
  for (std::size_t i = 1; i + 1 < upper.size(); ++i) h.ccw_.push_back(upper[i]);

  h.by_x_.reserve(h.ccw_.size());
  std::size_t li = 0;
  std::size_t ui = upper.size() >= 2 ? upper.size() - 2 : 0;  // ascending walk over the upper interior
  const std::size_t upper_interior = upper.size() >= 2 ? upper.size() - 2 : 0;
  std::size_t taken_upper = 0;
  while (li < lower.size() || taken_upper < upper_interior) {
    const bool take_lower =
        taken_upper == upper_interior || (li < lower.size() && lower[li] < upper[ui]);
    if (take_lower) {
      h.by_x_.push_back(lower[li++]);
    } else {
      h.by_x_.push_back(upper[ui--]);
      ++taken_upper;
    }
  }
  return h;
}

bool Hull::contains(Point p) const noexcept {
  if (ccw_.empty()) return false;
  if (ccw_.size() == 1) return p == ccw_.front();
  if (ccw_.size() == 2) {
    const Point a = ccw_[0], b = ccw_[1];
    return orientation(a, b, p) == 0 && !(p < a) && !(b < p);
  }
  for (std::size_t i = 0; i < ccw_.size(); ++i)
    if (orientation(ccw_[i], ccw_[(i + 1) % ccw_.size()], p) < 0) return false;
  return true;
}

bool Hull::strictly_convex() const noexcept {
  if (ccw_.size() < 3) {
    return ccw_.size() < 2 || ccw_[0] != ccw_[1];
  }
  for (std::size_t i = 0; i < ccw_.size(); ++i) {
    const std::size_t n = ccw_.size();
    if (orientation(ccw_[i], ccw_[(i + 1) % n], ccw_[(i + 2) % n]) <= 0) return false;
  }
  return true;
}

Hull hull_of_sorted(std::span<const Point> sorted, HullStats* stats) {
  std::vector<Point> unique;
  unique.reserve(sorted.size());
  for (const Point& p : sorted)
    if (unique.empty() || unique.back() != p) unique.push_back(p);
  if (unique.size() <= 1) return Hull::from_chains(unique, unique);

  auto chain = [&](auto begin, auto end) {
    std::vector<Point> out;
    for (auto it = begin; it != end; ++it) {
      while (out.size() >= 2 && counted_orientation(out[out.size() - 2], out.back(), *it, stats) <= 0)
        out.pop_back();
      out.push_back(*it);
    }
    return out;
  };
  const std::vector<Point> lower = chain(unique.begin(), unique.end());
  const std::vector<Point> upper = chain(unique.rbegin(), unique.rend());
  return Hull::from_chains(lower, upper);
}

Hull merge_hulls(const Hull& first, const Hull& second, HullStats* stats) {
  const auto a = first.sorted_by_x();
  const auto b = second.sorted_by_x();
  std::vector<Point> merged(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin());
  return hull_of_sorted(merged, stats);
}

Hull hull_divide_conquer(std::span<const Point> points, HullStats* stats) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  if (points.size() <= 5) return hull_bruteforce(points, stats);
  const std::size_t half = points.size() / 2;
  const Hull left = hull_divide_conquer(points.first(half), stats);
  const Hull right = hull_divide_conquer(points.subspan(half), stats);
  return merge_hulls(left, right, stats);
}

Hull hull_bruteforce(std::span<const Point> points, HullStats* stats) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  if (points.size() > kBruteForceHullLimit)
    throw std::length_error("brute-force hull limited to " + std::to_string(kBruteForceHullLimit) +
                            " points");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n == 1) return Hull::from_chains(pts, pts);

  std::vector<bool> vertex(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Point lo = std::min(pts[i], pts[j]);
      const Point hi = std::max(pts[i], pts[j]);
      bool edge = true;
      for (std::size_t k = 0; k < n && edge; ++k) {
        if (k == i || k == j) continue;
        const int o = counted_orientation(pts[i], pts[j], pts[k], stats);
        // Collinear points on a hull edge must sit strictly between its ends.
        edge = o > 0 || (o == 0 && lo < pts[k] && pts[k] < hi);
      }
      if (edge) vertex[i] = vertex[j] = true;
    }
  }

  std::vector<Point> verts;
  for (std::size_t i = 0; i < n; ++i)
    if (vertex[i]) verts.push_back(pts[i]);  // already lexicographic
  const Point first = verts.front();
  const Point last = verts.back();
  std::vector<Point> lower{first};
  std::vector<Point> upper{last};
  for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
    const int o = counted_orientation(first, last, verts[i], stats);
    if (o < 0) lower.push_back(verts[i]);
    if (o > 0) upper.push_back(verts[i]);
  }
  lower.push_back(last);
  std::reverse(upper.begin() + 1, upper.end());
  upper.push_back(first);
  return Hull::from_chains(lower, upper);
}

std::vector<Point> uniform_points(std::size_t n, Rng& rng) {
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    p.x = rng.uniform();
    p.y = rng.uniform();
  }
  return pts;
}

std::vector<ExperimentRecord> hull_size_experiment(std::span<const std::size_t> ns, std::size_t trials,
                                                   std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  std::vector<ExperimentRecord> records;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const std::size_t n = ns[idx];
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    std::vector<std::size_t> sizes(trials);
    parallel_for(trials, [&](std::size_t t) {
      Rng rng(seed, trial_stream(idx, t));
      sizes[t] = hull_divide_conquer(uniform_points(n, rng)).size();
    });
    double mean = 0.0;
    for (std::size_t s : sizes) mean += static_cast<double>(s);
    mean /= static_cast<double>(trials);
    ExperimentRecord r;
    r.experiment = "hull";
    r.seed = seed;
    r.param("n", std::to_string(n)).param("trials", std::to_string(trials));
    r.stat("mean_hull_size", mean);
    r.stat("mean_hull_size_over_ln_n", n > 1 ? mean / std::log(static_cast<double>(n)) : mean);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace avgcase
