#include "avgcase/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace avgcase {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), degree_(n, 0) {}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex id out of range");
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex id out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (has_edge(u, v)) return;
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++degree_[u];
  ++degree_[v];
  ++edges_;
}

std::size_t Graph::degree(std::size_t v) const { return degree_.at(v); }

std::span<const std::uint64_t> Graph::row(std::size_t v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  return {bits_.data() + v * words_, words_};
}

std::size_t Graph::common_neighbors(std::size_t u, std::size_t v) const {
  const auto ru = row(u);
  const auto rv = row(v);
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += static_cast<std::size_t>(std::popcount(ru[w] & rv[w]));
  return count;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w)
    for (std::uint64_t bits = r[w]; bits; bits &= bits - 1)
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  return out;
}

bool same_bisection(const Bisection& x, const Bisection& y) {
  return (x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a);
}

Graph gen_er(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("edge probability must lie in [0,1]");
  Graph g(n);
  if (p == 0.0) return g;
  if (p == 1.0 || p == 0.5) {
    // For p = 1/2 each pair consumes a single fair bit.
    std::uint64_t word = 0;
    unsigned left = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        bool present = true;
        if (p == 0.5) {
          if (left == 0) {
            word = rng.next_u64();
            left = 64;
          }
          present = word & 1u;
          word >>= 1;
          --left;
        }
        if (present) g.add_edge(u, v);
      }
    }
    return g;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.add_edge(u, v);
  return g;
}

Bisection random_bisection(std::size_t n, Rng& rng) {
  if (n % 2 != 0) throw std::invalid_argument("bisection needs an even vertex count");
  std::vector<std::size_t> perm = random_permutation(n, rng);
  Bisection split;
  split.a.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n / 2));
  split.b.assign(perm.begin() + static_cast<std::ptrdiff_t>(n / 2), perm.end());
  std::sort(split.a.begin(), split.a.end());
  std::sort(split.b.begin(), split.b.end());
  return split;
}

Graph gen_planted_bisection(std::size_t n, double p, double q, Rng& rng) {
  if (n % 2 != 0) throw std::invalid_argument("planted bisection needs an even vertex count");
  if (!(q >= 0.0 && q <= p && p <= 1.0)) throw std::domain_error("need 0 <= q <= p <= 1");
  Bisection split = random_bisection(n, rng);
  std::vector<bool> in_a(n, false);
  for (std::size_t v : split.a) in_a[v] = true;
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < (in_a[u] == in_a[v] ? p : q)) g.add_edge(u, v);
  g.planted_bisection = std::move(split);
  return g;
}

Graph gen_planted_clique(std::size_t n, std::size_t k, Rng& rng) {
  if (k < 1 || k > n) throw std::invalid_argument("clique size must satisfy 1 <= k <= n");
  Graph g = gen_er(n, 0.5, rng);
  std::vector<std::size_t> perm = random_permutation(n, rng);
  std::vector<std::size_t> clique(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(clique.begin(), clique.end());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) g.add_edge(clique[i], clique[j]);
  g.planted_clique = std::move(clique);
  return g;
}

std::vector<std::size_t> top_k_degrees(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      const std::size_t da = g.degree(a), db = g.degree(b);
                      return da != db ? da > db : a < b;
                    });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::size_t> greedy_clique(const Graph& g, Rng& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> chosen;
  if (n == 0) return chosen;
  // Candidates: vertices adjacent to everything chosen so far.
  std::vector<std::uint64_t> candidates((n + 63) / 64, ~std::uint64_t{0});
  for (std::size_t v : random_permutation(n, rng)) {
    if (!((candidates[v / 64] >> (v % 64)) & 1u)) continue;
    chosen.push_back(v);
    const auto r = g.row(v);
    for (std::size_t w = 0; w < candidates.size(); ++w) candidates[w] &= r[w];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool is_clique(const Graph& g, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !g.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

Bisection common_neighbor_bisection(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 != 0) throw std::invalid_argument("common_neighbor_bisection needs an even vertex count");
  if (n < 4) throw std::invalid_argument("common_neighbor_bisection needs at least 4 vertices");
  constexpr std::size_t pivot = 0;
  std::vector<std::size_t> common(n, 0);
  std::vector<std::size_t> others;
  for (std::size_t u = 0; u < n; ++u) {
    if (u == pivot) continue;
    common[u] = g.common_neighbors(pivot, u);
    others.push_back(u);
  }
  std::stable_sort(others.begin(), others.end(),
                   [&](std::size_t x, std::size_t y) { return common[x] < common[y]; });
  Bisection split;
  split.a.assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(n / 2));
  split.b.assign(others.begin() + static_cast<std::ptrdiff_t>(n / 2), others.end());
  split.b.push_back(pivot);
  std::sort(split.a.begin(), split.a.end());
  std::sort(split.b.begin(), split.b.end());
  return split;
}

std::size_t bisection_cut(const Graph& g, const Bisection& split) {
  const std::size_t n = g.vertex_count();
  if (split.a.size() != split.b.size() || split.a.size() + split.b.size() != n)
    throw std::invalid_argument("sides of a bisection must have n/2 vertices each");
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> side_b(words, 0);
  std::vector<bool> seen(n, false);
  auto mark = [&](std::size_t v) {
    if (v >= n || seen[v]) throw std::invalid_argument("bisection sides must partition the vertices");
    seen[v] = true;
  };
  for (std::size_t v : split.a) mark(v);
  for (std::size_t v : split.b) {
    mark(v);
    side_b[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  std::size_t cut = 0;
  for (std::size_t u : split.a) {
    const auto r = g.row(u);
    for (std::size_t w = 0; w < words; ++w) cut += static_cast<std::size_t>(std::popcount(r[w] & side_b[w]));
  }
  return cut;
}

double expected_k_cliques(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("k must not exceed n");
  const double nd = static_cast<double>(n), kd = static_cast<double>(k);
  const double log_choose = std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
  const double log_edges = kd * (kd - 1.0) / 2.0 * std::log(2.0);
  return std::exp(log_choose - log_edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list header must be `n m`");
  Graph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list ended after " + std::to_string(e) + " edges");
    if (g.has_edge(u, v)) throw std::invalid_argument("edge list repeats an edge");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace avgcase
