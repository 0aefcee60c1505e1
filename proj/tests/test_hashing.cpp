#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "avgcase/common.hpp"
#include "avgcase/hashing.hpp"

using avgcase::ProbeTable;

namespace {

// Probes an insertion at h would take, by walking the slots directly.
std::size_t scan_probes(const ProbeTable& t, std::size_t h) {
  std::size_t probes = 1;
  while (t.slot((h + probes - 1) % t.capacity())) ++probes;
  return probes;
}

}  // namespace

TEST_CASE("insert examples") {
  ProbeTable t(5);
  CHECK(t.insert(100, 3) == 1);
  CHECK(t.slot(3) == 100u);

  ProbeTable w(5);
  w.insert(1, 3);
  w.insert(2, 4);
  CHECK(w.insert(3, 3) == 3);
  CHECK(w.slot(0) == 3u);
}

TEST_CASE("insert errors") {
  ProbeTable t(2);
  CHECK_THROWS_AS(t.insert(1, 2), std::out_of_range);
  t.insert(1, 0);
  CHECK_THROWS_AS(t.insert(1, 0), std::invalid_argument);
  t.insert(2, 0);
  CHECK_THROWS_AS(t.insert(3, 1), std::length_error);
  CHECK_THROWS_AS(t.expected_insertion_probes(), std::length_error);
  CHECK_THROWS_AS(ProbeTable(0), std::invalid_argument);
}

TEST_CASE("lookup examples") {
  ProbeTable t(8);
  const std::size_t probes = t.insert(7, 2);
  const auto hit = t.lookup(7, 2);
  CHECK(hit.found);
  CHECK(hit.probes == probes);

  const auto miss = t.lookup(9, 5);
  CHECK_FALSE(miss.found);
  CHECK(miss.probes == 1);

  t.insert(8, 3);
  t.insert(10, 4);  // run occupies 2,3,4
  const auto run_miss = t.lookup(11, 2);
  CHECK_FALSE(run_miss.found);
  CHECK(run_miss.probes == 4);
}

TEST_CASE("geometric reference") {
  CHECK(avgcase::geometric_reference(0.0) == 1.0);
  CHECK(avgcase::geometric_reference(0.5) == 2.0);
  CHECK(avgcase::geometric_reference(0.75) == 4.0);
  CHECK_THROWS_AS(avgcase::geometric_reference(1.0), std::domain_error);
  CHECK_THROWS_AS(avgcase::geometric_reference(-0.1), std::domain_error);
}

TEST_CASE("every key is found with its insertion cost and absent keys are absent") {
  avgcase::Rng rng(4);
  for (std::size_t cap : {1u, 2u, 7u, 64u, 1000u}) {
    ProbeTable t(cap);
    std::vector<std::pair<std::uint64_t, std::size_t>> keys;
    std::vector<std::size_t> costs;
    for (std::size_t i = 0; i < cap; ++i) {
      const std::size_t h = rng.uniform_index(cap);
      const std::size_t probes = t.insert(i, h);
      REQUIRE(probes == t.probe_log().back());
      keys.emplace_back(i, h);
      costs.push_back(t.probe_log().back());
    }
    CHECK(t.size() == cap);
    CHECK(t.load() == 1.0);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto r = t.lookup(keys[i].first, keys[i].second);
      CHECK(r.found);
      CHECK(r.probes == costs[i]);
    }
    CHECK_FALSE(t.lookup(cap + 5, 0).found);
  }
}

TEST_CASE("expected insertion probes averages the scan cost over all start slots") {
  avgcase::Rng rng(12);
  ProbeTable t(257);
  for (std::uint64_t k = 0; k < 200; ++k) {
    t.insert(k, rng.uniform_index(257));
    if (k % 20 == 0) {
      double sum = 0;
      for (std::size_t h = 0; h < 257; ++h) sum += static_cast<double>(scan_probes(t, h));
      CHECK(t.expected_insertion_probes() == doctest::Approx(sum / 257).epsilon(1e-12));
    }
  }
}

TEST_CASE("occupied slots do not depend on instrumentation") {
  avgcase::Rng a(21), b(21);
  ProbeTable t1(128), t2(128);
  for (std::uint64_t k = 0; k < 100; ++k) {
    t1.insert(k, a.uniform_index(128));
    t2.insert(k, b.uniform_index(128));
    (void)t2.expected_insertion_probes();
    (void)t2.lookup(k, 0);
  }
  for (std::size_t i = 0; i < 128; ++i) CHECK(t1.slot(i) == t2.slot(i));
}

TEST_CASE("half-full table has finite mean insertion cost at least one") {
  avgcase::Rng rng(99);
  ProbeTable t(1 << 16);
  for (std::uint64_t k = 0; k < (1u << 15); ++k) t.insert(k, rng.uniform_index(1 << 16));
  const double m = t.expected_insertion_probes();
  CHECK(m >= 1.0);
  CHECK(std::isfinite(m));
  CHECK(m >= avgcase::geometric_reference(0.5));
}

TEST_CASE("mix_hash is a deterministic bijection on samples") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t k = 0; k < 10000; ++k) seen.insert(avgcase::mix_hash(k));
  CHECK(seen.size() == 10000);
  CHECK(avgcase::mix_hash(12345) == avgcase::mix_hash(12345));
}
