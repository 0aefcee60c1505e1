#include "avgcase/binpack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace avgcase {

PackingInstance::PackingInstance(std::vector<double> sizes) : sizes_(std::move(sizes)) {
  for (double s : sizes_)
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("item sizes must lie in [0,1]");
}

double PackingInstance::total_size() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), 0.0);
}

namespace {

std::vector<std::size_t> decreasing_order(std::span<const double> sizes) {
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  return order;
}

// Max-residual segment tree over n potential bins; unopened bins have
// residual 1, so the leftmost fitting leaf is exactly the first-fit choice.
class FirstFitTree {
 public:
  explicit FirstFitTree(std::size_t n) : leaves_(1) {
    while (leaves_ < n) leaves_ *= 2;
    tree_.assign(2 * leaves_, 1.0);
  }

  std::size_t first_fit(double size) const {
    std::size_t node = 1;
    while (node < leaves_) {
      node *= 2;
      if (tree_[node] + kBinCapacityTolerance < size) ++node;
    }
    return node - leaves_;
  }

  void set(std::size_t bin, double residual) {
    std::size_t node = bin + leaves_;
    tree_[node] = residual;
    for (node /= 2; node >= 1; node /= 2) tree_[node] = std::max(tree_[2 * node], tree_[2 * node + 1]);
  }

 private:
  std::size_t leaves_;
  std::vector<double> tree_;
};

}  // namespace

Packing ffd(const PackingInstance& inst) {
  const auto sizes = inst.sizes();
  Packing packing;
  if (sizes.empty()) return packing;
  FirstFitTree tree(sizes.size());
  std::vector<double> load;
  for (std::size_t item : decreasing_order(sizes)) {
    const std::size_t bin = tree.first_fit(sizes[item]);
    if (bin == packing.bins.size()) {
      packing.bins.emplace_back();
      load.push_back(0.0);
    }
    packing.bins[bin].push_back(item);
    load[bin] += sizes[item];
    tree.set(bin, 1.0 - load[bin]);
  }
  return packing;
}

double truncate_match_cutoff(std::size_t n) {
  return 1.0 - 2.0 / std::pow(static_cast<double>(n), 0.25);
}

Packing truncate_match(const PackingInstance& inst) {
  const auto sizes = inst.sizes();
  Packing packing;
  if (sizes.empty()) return packing;
  const double cutoff = truncate_match_cutoff(sizes.size());

  std::vector<std::size_t> rest;
  for (std::size_t item : decreasing_order(sizes)) {
    if (sizes[item] >= cutoff)
      packing.bins.push_back({item});
    else
      rest.push_back(item);
  }

  const std::size_t k = rest.size();
  for (std::size_t i = 0; i < k / 2; ++i) {
    const std::size_t big = rest[i];
    const std::size_t small = rest[k - 1 - i];
    if (sizes[big] + sizes[small] <= 1.0 + kBinCapacityTolerance) {
      packing.bins.push_back({big, small});
    } else {
      packing.bins.push_back({big});
      packing.bins.push_back({small});
    }
  }
  if (k % 2 == 1) packing.bins.push_back({rest[k / 2]});
  return packing;
}

std::size_t size_lower_bound(const PackingInstance& inst) {
  const double total = inst.total_size();
  // Instances whose sizes sum to an integer in exact arithmetic can land a
  // few ulps above it.
  return static_cast<std::size_t>(std::max(0.0, std::ceil(total - 1e-9)));
}

PackingInstance exercise3_instance(double eps) {
  if (!(eps > 0.0 && eps < 0.01)) throw std::domain_error("epsilon must lie in (0, 1/100)");
  std::vector<double> sizes;
  sizes.insert(sizes.end(), 6, 0.5 + eps);
  sizes.insert(sizes.end(), 6, 0.25 + 2 * eps);
  sizes.insert(sizes.end(), 6, 0.25 + eps);
  sizes.insert(sizes.end(), 12, 0.25 - 2 * eps);
  return PackingInstance(std::move(sizes));
}

Packing exercise3_witness(double eps) {
  if (!(eps > 0.0 && eps < 0.01)) throw std::domain_error("epsilon must lie in (0, 1/100)");
  // Index blocks follow exercise3_instance: [0,6) big, [6,12) 1/4+2e,
  // [12,18) 1/4+e, [18,30) 1/4-2e.
  Packing packing;
  for (std::size_t i = 0; i < 6; ++i) packing.bins.push_back({i, 12 + i, 18 + i});
  for (std::size_t i = 0; i < 3; ++i)
    packing.bins.push_back({6 + 2 * i, 7 + 2 * i, 24 + 2 * i, 25 + 2 * i});
  return packing;
}

bool validate_packing(const PackingInstance& inst, const Packing& packing) {
  const auto sizes = inst.sizes();
  std::vector<bool> seen(sizes.size(), false);
  std::size_t placed = 0;
  for (const auto& bin : packing.bins) {
    double load = 0.0;
    for (std::size_t item : bin) {
      if (item >= sizes.size() || seen[item]) return false;
      seen[item] = true;
      ++placed;
      load += sizes[item];
    }
    if (load > 1.0 + kBinCapacityTolerance) return false;
  }
  return placed == sizes.size();
}

PackingInstance uniform_instance(std::size_t n, Rng& rng) {
  std::vector<double> sizes(n);
  for (double& s : sizes) s = rng.uniform();
  return PackingInstance(std::move(sizes));
}

}  // namespace avgcase
