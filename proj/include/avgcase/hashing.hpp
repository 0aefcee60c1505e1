#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace avgcase {

// Open-addressing table with linear probing and no deletions. Hash values are
// supplied by the caller as slot indices in [0, capacity); probe counts count
// every slot inspected, including the final empty or matching slot.
class ProbeTable {
 public:
  explicit ProbeTable(std::size_t capacity);

  // Places `key` in the first empty slot of hash, hash+1, ... (mod capacity)
  // and returns the number of slots inspected. Throws std::length_error when
  // full and std::invalid_argument when the key is already on its probe path.
  std::size_t insert(std::uint64_t key, std::size_t hash);

  struct LookupResult {
    bool found = false;
    std::size_t probes = 0;
  };
  LookupResult lookup(std::uint64_t key, std::size_t hash) const;

  std::size_t capacity() const noexcept { return slots_.size(); }
  std::size_t size() const noexcept { return occupied_; }
  double load() const noexcept { return static_cast<double>(occupied_) / static_cast<double>(slots_.size()); }

  std::optional<std::uint64_t> slot(std::size_t index) const;

  // Probe count of every insert so far, in insertion order.
  std::span<const std::size_t> probe_log() const noexcept { return probe_log_; }

  // Expected probes of one more insertion whose hash is uniform over all
  // slots, computed exactly by averaging over the capacity start positions.
  // Throws std::length_error on a full table.
  double expected_insertion_probes() const;

 private:
  struct Slot {
    std::uint64_t key = 0;
    bool used = false;
  };

  std::vector<Slot> slots_;
  std::size_t occupied_ = 0;
  std::vector<std::size_t> probe_log_;
};

// 1/(1-alpha): expected probes if every probe hit an independent uniform slot.
double geometric_reference(double alpha);

// splitmix64 finalizer; for callers that want a hash outside experiments.
std::uint64_t mix_hash(std::uint64_t key) noexcept;

}  // namespace avgcase
