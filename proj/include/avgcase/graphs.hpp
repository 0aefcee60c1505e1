#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "avgcase/common.hpp"

namespace avgcase {

// Balanced two-sided split; both sides hold ascending vertex ids.
struct Bisection {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

// Equal up to swapping the sides.
bool same_bisection(const Bisection& x, const Bisection& y);

// Undirected simple graph stored as one adjacency bitset per vertex, so pair
// queries are O(1) and common-neighbour counts are word-parallel.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  bool has_edge(std::size_t u, std::size_t v) const;
  // Ignores edges already present. Throws on self-loops or bad ids.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t degree(std::size_t v) const;
  std::size_t common_neighbors(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  std::span<const std::uint64_t> row(std::size_t v) const;

  std::optional<std::vector<std::size_t>> planted_clique;
  std::optional<Bisection> planted_bisection;

 private:
  std::size_t n_;
  std::size_t words_;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> degree_;
};

// Each of the C(n,2) pairs independently with probability p, drawn in
// (u, v), u < v lexicographic order.
Graph gen_er(std::size_t n, double p, Rng& rng);

// Uniform balanced split (S, T); same-side pairs with probability p, cross
// pairs with probability q. n must be even and 0 <= q <= p <= 1.
Graph gen_planted_bisection(std::size_t n, double p, double q, Rng& rng);

// G(n, 1/2) plus every edge inside a uniform k-subset Q.
Graph gen_planted_clique(std::size_t n, std::size_t k, Rng& rng);

// k largest degrees, ties to the lower vertex id; returned ascending.
std::vector<std::size_t> top_k_degrees(const Graph& g, std::size_t k);

// Scan vertices in random order, keep each one adjacent to everything kept.
// Returned ascending.
std::vector<std::size_t> greedy_clique(const Graph& g, Rng& rng);

bool is_clique(const Graph& g, std::span<const std::size_t> vertices);

// A = the n/2 vertices other than 0 with the fewest common neighbours with
// vertex 0 (ties to lower id); B = the rest, including 0.
Bisection common_neighbor_bisection(const Graph& g);

std::size_t bisection_cut(const Graph& g, const Bisection& split);

Bisection random_bisection(std::size_t n, Rng& rng);

// C(n,k) 2^{-C(k,2)}, evaluated in log space.
double expected_k_cliques(std::size_t n, std::size_t k);

// Text edge list: header `n m`, then one `u v` line per edge with u < v.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

}  // namespace avgcase
