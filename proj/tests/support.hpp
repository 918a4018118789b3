#pragma once

#include <mbdom/canonical.hpp>
#include <mbdom/graph.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace mbdom::testkit {

/// G(n, p) with a fixed generator.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Certificate by trying every relabeling; only for tiny n.
inline std::string brute_certificate(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string bits;
    const Graph h = g.permuted(p);
    for (int j = 1; j < h.order(); ++j)
      for (int i = 0; i < j; ++i) bits += h.adjacent(i, j) ? '1' : '0';
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// All labeled graphs on n vertices, one per edge subset.
template <typename F>
void for_each_labeled_graph(int n, F&& f) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) es.push_back(slots[i]);
    f(Graph::from_edges(n, es));
  }
}

}  // namespace mbdom::testkit
