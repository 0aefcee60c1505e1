#include "avgcase/hashing.hpp"

#include <stdexcept>
#include <string>

namespace avgcase {

ProbeTable::ProbeTable(std::size_t capacity) : slots_(capacity) {
  if (capacity == 0) throw std::invalid_argument("probe table capacity must be positive");
}

std::size_t ProbeTable::insert(std::uint64_t key, std::size_t hash) {
  const std::size_t n = slots_.size();
  if (hash >= n) throw std::out_of_range("hash value " + std::to_string(hash) + " outside table");
  if (occupied_ == n) throw std::length_error("probe table is full");
  std::size_t probes = 1;
  for (std::size_t i = hash;; i = (i + 1 == n ? 0 : i + 1), ++probes) {
    Slot& s = slots_[i];
    if (!s.used) {
      s.used = true;
      s.key = key;
      ++occupied_;
      probe_log_.push_back(probes);
      return probes;
    }
    if (s.key == key) throw std::invalid_argument("duplicate key " + std::to_string(key));
  }
}

ProbeTable::LookupResult ProbeTable::lookup(std::uint64_t key, std::size_t hash) const {
  const std::size_t n = slots_.size();
  if (hash >= n) throw std::out_of_range("hash value " + std::to_string(hash) + " outside table");
  LookupResult r;
  for (std::size_t i = hash; r.probes < n; i = (i + 1 == n ? 0 : i + 1)) {
    ++r.probes;
    const Slot& s = slots_[i];
    if (!s.used) return r;
    if (s.key == key) {
      r.found = true;
      return r;
    }
  }
  return r;  // full table, key absent
}

std::optional<std::uint64_t> ProbeTable::slot(std::size_t index) const {
  const Slot& s = slots_.at(index);
  if (!s.used) return std::nullopt;
  return s.key;
}

double ProbeTable::expected_insertion_probes() const {
  const std::size_t n = slots_.size();
  if (occupied_ == n) throw std::length_error("probe table is full");
  // Walk backwards from an empty slot: the distance to the next empty slot
  // going forward is 0 at the empty slot and grows by one per occupied slot.
  std::size_t start = 0;
  while (slots_[start].used) ++start;
  std::size_t total = 0;
  std::size_t run = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = (start + n - step) % n;
    run = slots_[i].used ? run + 1 : 0;
    total += run + 1;
  }
  return static_cast<double>(total) / static_cast<double>(n);
}

double geometric_reference(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::domain_error("load factor must lie in [0,1)");
  return 1.0 / (1.0 - alpha);
}

std::uint64_t mix_hash(std::uint64_t key) noexcept {
  key += 0x9E3779B97F4A7C15ull;
  key = (key ^ (key >> 30)) * 0xBF58476D1CE4E5B9ull;
  key = (key ^ (key >> 27)) * 0x94D049BB133111EBull;
  return key ^ (key >> 31);
}

}  // namespace avgcase
