#include "avgcase/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "avgcase/parallel.hpp"

namespace avgcase {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
constexpr int kPhiloxRounds = 10;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) noexcept : seed_(seed), stream_(stream) {}

Rng::Block Rng::philox(Block ctr, Key key) noexcept {
  for (int round = 0; round < kPhiloxRounds; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

void Rng::refill() noexcept {
  const Block counter = {static_cast<std::uint32_t>(block_index_),
                         static_cast<std::uint32_t>(block_index_ >> 32),
                         static_cast<std::uint32_t>(stream_),
                         static_cast<std::uint32_t>(stream_ >> 32)};
  const Key key = {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
  const Block out = philox(counter, key);
  ++block_index_;
  buffer_[0] = static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
  buffer_[1] = static_cast<std::uint64_t>(out[2]) | (static_cast<std::uint64_t>(out[3]) << 32);
  buffered_ = 2;
}

std::uint64_t Rng::next_u64() noexcept {
  if (buffered_ == 0) refill();
  return buffer_[2 - buffered_--];
}

double Rng::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) noexcept {
  // Reject the low 2^64 mod bound values so the modulus is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  shuffle(std::span<std::size_t>(perm), rng);
  return perm;
}

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> support) : atoms_(std::move(support)) {
  if (atoms_.empty()) throw std::invalid_argument("distribution support is empty");
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!std::isfinite(a.value)) throw std::invalid_argument("support value is not finite");
    if (!(a.prob > 0.0 && a.prob <= 1.0))
      throw std::invalid_argument("support probability outside (0,1]");
    if (i > 0 && !(atoms_[i - 1].value < a.value))
      throw std::invalid_argument("support values must be strictly ascending");
    total += a.prob;
  }
  if (std::abs(total - 1.0) > kProbabilitySumTolerance)
    throw std::invalid_argument("support probabilities do not sum to 1");
}

DiscreteDistribution DiscreteDistribution::point_mass(double value) {
  return DiscreteDistribution({{value, 1.0}});
}

double DiscreteDistribution::cdf(double x) const noexcept {
  double p = 0.0;
  for (const Atom& a : atoms_) {
    if (a.value > x) break;
    p += a.prob;
  }
  return std::min(p, 1.0);
}

double DiscreteDistribution::prob_below(double x) const noexcept {
  double p = 0.0;
  for (const Atom& a : atoms_) {
    if (!(a.value < x)) break;
    p += a.prob;
  }
  return std::min(p, 1.0);
}

double DiscreteDistribution::mean() const noexcept {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.value * a.prob;
  return m;
}

double sample(const DiscreteDistribution& dist, Rng& rng) {
  const auto support = dist.support();
  const double u = rng.uniform();
  double acc = 0.0;
  for (const Atom& a : support) {
    acc += a.prob;
    if (u < acc) return a.value;
  }
  // Rounding can leave acc a hair below 1.
  return support.back().value;
}

std::vector<double> support_union(std::span<const DiscreteDistribution> dists) {
  std::vector<double> values;
  for (const auto& d : dists)
    for (const Atom& a : d.support()) values.push_back(a.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

double expected_max(std::span<const DiscreteDistribution> dists) {
  if (dists.empty()) throw std::invalid_argument("expected_max needs at least one distribution");
  const std::vector<double> values = support_union(dists);
  double result = 0.0;
  double below = 0.0;  // P(max <= previous value)
  for (double v : values) {
    double at_or_below = 1.0;
    for (const auto& d : dists) at_or_below *= d.cdf(v);
    result += v * (at_or_below - below);
    below = at_or_below;
  }
  return result;
}

std::size_t thread_cap() {
  if (const char* env = std::getenv("AVGCASE_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return value == 0 ? 1 : static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace avgcase
