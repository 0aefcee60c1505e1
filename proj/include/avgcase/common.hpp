#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace avgcase {

// Philox4x32-10 counter-based generator.
//
// The key is the master seed and the upper half of the 128-bit counter is the
// stream id, so (seed, stream) pairs index disjoint sequences and any trial's
// stream can be reconstructed without replaying the others. Output depends
// only on integer arithmetic, so it is identical on every platform.
class Rng {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  // One Philox4x32-10 bijection of `counter` under `key`.
  static Block philox(Block counter, Key key) noexcept;

  std::uint64_t next_u64() noexcept;

  // Uniform double in [0,1) built from the top 53 bits of next_u64().
  double uniform() noexcept;

  // Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) noexcept;

  bool bernoulli(double p) noexcept { return uniform() < p; }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  unsigned buffered_ = 0;
};

// Fisher-Yates with Rng::uniform_index; std::shuffle is not portable bit-for-bit.
template <class T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_index(i));
    std::swap(items[i - 1], items[j]);
  }
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

struct Atom {
  double value;
  double prob;
};

inline constexpr double kProbabilitySumTolerance = 1e-12;

// Finite distribution over reals. Values strictly ascending, probabilities in
// (0,1] summing to 1 within kProbabilitySumTolerance.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<Atom> support);

  static DiscreteDistribution point_mass(double value);

  std::span<const Atom> support() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  double min_value() const noexcept { return atoms_.front().value; }
  double max_value() const noexcept { return atoms_.back().value; }

  // P(v <= x)
  double cdf(double x) const noexcept;
  // P(v < x)
  double prob_below(double x) const noexcept;
  double mean() const noexcept;

 private:
  std::vector<Atom> atoms_;
};

double sample(const DiscreteDistribution& dist, Rng& rng);

// Exact E[max_i v_i] for independent v_i, from P(max <= u) = prod_i F_i(u)
// over the sorted union of supports.
double expected_max(std::span<const DiscreteDistribution> dists);

// Sorted, de-duplicated union of all support values.
std::vector<double> support_union(std::span<const DiscreteDistribution> dists);

}  // namespace avgcase
