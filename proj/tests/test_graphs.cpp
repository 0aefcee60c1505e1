#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "avgcase/graphs.hpp"

using namespace avgcase;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void check_simple(const Graph& g) {
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    CHECK_FALSE(g.has_edge(u, u));
    degree_sum += g.degree(u);
    for (std::size_t v : g.neighbors(u)) CHECK(g.has_edge(v, u));
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

std::size_t naive_common(const Graph& g, std::size_t u, std::size_t v) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < g.vertex_count(); ++w) c += g.has_edge(u, w) && g.has_edge(v, w);
  return c;
}

double binomial(std::size_t n, std::size_t k) {
  long double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  return static_cast<double>(r);
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::out_of_range);
  CHECK_THROWS_AS(g.has_edge(7, 0), std::out_of_range);
  CHECK(g.neighbors(1) == std::vector<std::size_t>{0});
}

TEST_CASE("erdos-renyi generator examples") {
  Rng rng(1);
  const Graph k3 = gen_er(3, 1.0, rng);
  CHECK(k3.edge_count() == 3);
  CHECK(gen_er(100, 0.0, rng).edge_count() == 0);
  const double pairs = 200.0 * 199.0 / 2.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = gen_er(200, 0.5, rng);
    check_simple(g);
    CHECK(std::abs(static_cast<double>(g.edge_count()) - pairs / 2) <= 4 * std::sqrt(pairs / 4));
  }
  const Graph g3 = gen_er(150, 0.3, rng);
  CHECK(std::abs(static_cast<double>(g3.edge_count()) - 0.3 * 11175) <= 4 * std::sqrt(11175 * 0.21));
  CHECK_THROWS_AS(gen_er(10, 1.5, rng), std::domain_error);
}

TEST_CASE("planted bisection generator") {
  Rng rng(2);
  const Graph two_triangles = gen_planted_bisection(6, 1.0, 0.0, rng);
  CHECK(two_triangles.edge_count() == 6);
  const Bisection& split = *two_triangles.planted_bisection;
  CHECK(split.a.size() == 3);
  CHECK(split.b.size() == 3);
  for (std::size_t u : split.a)
    for (std::size_t v : split.b) CHECK_FALSE(two_triangles.has_edge(u, v));
  CHECK(bisection_cut(two_triangles, split) == 0);
  CHECK(same_bisection(common_neighbor_bisection(two_triangles), split));

  CHECK_THROWS_AS(gen_planted_bisection(7, 0.5, 0.2, rng), std::invalid_argument);
  CHECK_THROWS_AS(gen_planted_bisection(8, 0.2, 0.5, rng), std::domain_error);

  const Graph g = gen_planted_bisection(500, 0.5, 0.25, rng);
  check_simple(g);
  const Bisection& s = *g.planted_bisection;
  const double cross = static_cast<double>(bisection_cut(g, s));
  const double intra_pairs = 2.0 * 250.0 * 249.0 / 2.0;
  const double intra_density = (static_cast<double>(g.edge_count()) - cross) / intra_pairs;
  CHECK(std::abs(intra_density - 0.5) <= 4 * std::sqrt(0.25 / intra_pairs));
  CHECK(std::abs(cross / (250.0 * 250.0) - 0.25) <= 4 * std::sqrt(0.1875 / (250.0 * 250.0)));
}

TEST_CASE("planted bisection with p = q has the ER edge count") {
  Rng rng(3);
  const double pairs = 100.0 * 99.0 / 2.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = gen_planted_bisection(100, 0.4, 0.4, rng);
    CHECK(std::abs(static_cast<double>(g.edge_count()) - 0.4 * pairs) <= 4 * std::sqrt(pairs * 0.24));
  }
}

TEST_CASE("planted clique generator") {
  Rng rng(4);
  const Graph full = gen_planted_clique(30, 30, rng);
  CHECK(full.edge_count() == 30 * 29 / 2);
  const Graph g = gen_planted_clique(200, 25, rng);
  check_simple(g);
  REQUIRE(g.planted_clique);
  CHECK(g.planted_clique->size() == 25);
  CHECK(is_clique(g, *g.planted_clique));
  CHECK(gen_planted_clique(50, 1, rng).planted_clique->size() == 1);
  CHECK_THROWS_AS(gen_planted_clique(10, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(gen_planted_clique(10, 11, rng), std::invalid_argument);
}

TEST_CASE("top-k degrees") {
  const Graph k5 = complete(5);
  CHECK(top_k_degrees(k5, 5) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(top_k_degrees(k5, 2) == std::vector<std::size_t>{0, 1});
  Graph star(6);
  for (std::size_t v = 0; v < 6; ++v)
    if (v != 3) star.add_edge(3, v);
  CHECK(top_k_degrees(star, 1) == std::vector<std::size_t>{3});
  CHECK_THROWS_AS(top_k_degrees(star, 0), std::invalid_argument);
}

TEST_CASE("top-k degrees is permutation equivariant") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = gen_er(60, 0.5, rng);
    // Relabel by a permutation that preserves the relative order of equal
    // degrees (sort by degree, then id), so tie-breaking carries over.
    std::vector<std::size_t> by_rank(60);
    std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
    std::vector<std::size_t> relabel(60);
    for (std::size_t i = 0; i < 60; ++i) relabel[by_rank[i]] = i;
    Graph h(60);
    for (std::size_t u = 0; u < 60; ++u)
      for (std::size_t v : g.neighbors(u))
        if (u < v) h.add_edge(relabel[u], relabel[v]);
    auto mapped = top_k_degrees(g, 10);
    for (auto& v : mapped) v = relabel[v];
    std::sort(mapped.begin(), mapped.end());
    CHECK(top_k_degrees(h, 10) == mapped);
  }
}

TEST_CASE("greedy clique") {
  Rng rng(6);
  CHECK(greedy_clique(Graph(7), rng).size() == 1);
  CHECK(greedy_clique(complete(9), rng).size() == 9);
  CHECK(greedy_clique(Graph(0), rng).empty());
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen_er(1 + rng.uniform_index(80), rng.uniform(), rng);
    const auto clique = greedy_clique(g, rng);
    REQUIRE(is_clique(g, clique));
    // Maximal: nothing outside is adjacent to every member.
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (std::binary_search(clique.begin(), clique.end(), v)) continue;
      bool all = true;
      for (std::size_t u : clique) all = all && g.has_edge(u, v);
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("common neighbours and bisection cut") {
  Rng rng(7);
  const Graph g = gen_er(130, 0.5, rng);
  for (std::size_t u = 0; u < 130; u += 13)
    for (std::size_t v = 0; v < 130; v += 7) CHECK(g.common_neighbors(u, v) == naive_common(g, u, v));

  const Graph k4 = complete(4);
  CHECK(bisection_cut(k4, Bisection{{0, 1}, {2, 3}}) == 4);
  CHECK(bisection_cut(k4, Bisection{{0, 3}, {1, 2}}) == 4);
  CHECK(bisection_cut(Graph(6), Bisection{{0, 1, 2}, {3, 4, 5}}) == 0);
  CHECK_THROWS_AS(bisection_cut(k4, Bisection{{0}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(bisection_cut(k4, Bisection{{0, 0}, {1, 2}}), std::invalid_argument);

  for (int trial = 0; trial < 20; ++trial) {
    const Bisection s = random_bisection(130, rng);
    std::size_t naive = 0;
    for (std::size_t u : s.a)
      for (std::size_t v : s.b) naive += g.has_edge(u, v);
    CHECK(bisection_cut(g, s) == naive);
    CHECK(bisection_cut(g, s) == bisection_cut(g, Bisection{s.b, s.a}));
  }
}

TEST_CASE("common-neighbour bisection shape") {
  Rng rng(8);
  const Graph g = gen_er(40, 0.5, rng);
  const Bisection s = common_neighbor_bisection(g);
  CHECK(s.a.size() == 20);
  CHECK(s.b.size() == 20);
  CHECK(std::binary_search(s.b.begin(), s.b.end(), std::size_t{0}));
  std::size_t max_a = 0, min_b = SIZE_MAX;
  for (std::size_t v : s.a) max_a = std::max(max_a, g.common_neighbors(0, v));
  for (std::size_t v : s.b)
    if (v != 0) min_b = std::min(min_b, g.common_neighbors(0, v));
  CHECK(max_a <= min_b);
  CHECK_THROWS_AS(common_neighbor_bisection(Graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(common_neighbor_bisection(Graph(2)), std::invalid_argument);
}

TEST_CASE("recovery improves with the density gap") {
  Rng rng(9);
  std::size_t wide = 0, narrow = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g1 = gen_planted_bisection(500, 0.5, 0.25, rng);
    wide += same_bisection(common_neighbor_bisection(g1), *g1.planted_bisection);
    const Graph g2 = gen_planted_bisection(500, 0.5, 0.45, rng);
    narrow += same_bisection(common_neighbor_bisection(g2), *g2.planted_bisection);
  }
  CHECK(wide >= narrow);
}

TEST_CASE("expected k-cliques") {
  CHECK(expected_k_cliques(4, 2) == doctest::Approx(3.0));
  CHECK(expected_k_cliques(10, 0) == doctest::Approx(1.0));
  for (std::size_t n : {5u, 20u, 60u})
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(expected_k_cliques(n, k) ==
            doctest::Approx(binomial(n, k) * std::pow(2.0, -static_cast<double>(k * (k - 1) / 2))).epsilon(1e-9));
  CHECK_THROWS_AS(expected_k_cliques(3, 4), std::invalid_argument);
  // n = 1024: about 24 expected 15-cliques and 0.05 expected 16-cliques.
  CHECK(expected_k_cliques(1024, 15) == doctest::Approx(std::exp2(4.6012237035216685)).epsilon(1e-9));
  CHECK(expected_k_cliques(1024, 16) == doctest::Approx(std::exp2(-4.420065837371979)).epsilon(1e-9));
}

TEST_CASE("edge list round trip") {
  Rng rng(10);
  const Graph g = gen_er(70, 0.3, rng);
  std::stringstream io;
  write_edge_list(g, io);
  const std::string text = io.str();
  CHECK(text.rfind("70 " + std::to_string(g.edge_count()) + "\n", 0) == 0);
  const Graph back = read_edge_list(io);
  CHECK(back.edge_count() == g.edge_count());
  for (std::size_t u = 0; u < 70; ++u) CHECK(back.neighbors(u) == g.neighbors(u));

  std::istringstream truncated("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(truncated), std::invalid_argument);
  std::istringstream bad_header("x");
  CHECK_THROWS_AS(read_edge_list(bad_header), std::invalid_argument);
}
