#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace mbdom {

/// Largest order accepted by canonical_form.
inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-class certificate: the graph6 text of the canonically
/// relabeled graph. Equal certificates <=> isomorphic graphs.
struct CanonicalForm {
  std::string graph6;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Upper triangle in graph6 order, most significant bit first, so that array
// comparison is bit-string comparison.
using AdjacencyKey = std::array<std::uint64_t, 2>;

inline AdjacencyKey adjacency_key(const Graph& g, const std::vector<int>& position_of) {
  const int n = g.order();
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[position_of[v]] = v;
  AdjacencyKey key{};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet nb = g.neighbors(vertex_at[j]);
    for (int i = 0; i < j; ++i, ++k)
      if (nb.contains(vertex_at[i])) key[k / 64] |= std::uint64_t{1} << (63 - k % 64);
  }
  return key;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    std::vector<int> colors(n_, 0);
    search(colors);
    return best_labeling_;
  }

 private:
  // Splits color classes by neighbor-color counts until stable. Colors stay
  // dense in [0, cells) and the split order only depends on invariants.
  int refine(std::vector<int>& colors) const {
    int cells = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].assign(cells + 1, 0);
        sig[v][0] = colors[v];
        for (int u : g_.neighbors(v)) ++sig[v][1 + colors[u]];
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_);
      int c = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++c;
        next[order[i]] = c;
      }
      const int new_cells = c + 1;
      colors.swap(next);
      if (new_cells == cells) return cells;
      cells = new_cells;
    }
  }

  bool twins(int u, int v) const {
    const VertexSet pair = VertexSet{u, v};
    return (g_.neighbors(u) - pair) == (g_.neighbors(v) - pair);
  }

  void search(std::vector<int> colors) {
    const int cells = refine(colors);
    if (cells == n_) {
      const AdjacencyKey key = adjacency_key(g_, colors);
      if (best_labeling_.empty() || key < best_key_) {
        best_key_ = key;
        best_labeling_ = colors;
      }
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    const int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());

    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      // Swapping twins in the same cell is an automorphism fixing the
      // partition, so their subtrees yield the same certificate.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> child(n_);
      for (int w = 0; w < n_; ++w) child[w] = 2 * colors[w] + (w == v ? 0 : 1);
      std::vector<int> ranks = child;
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      for (int& c : child) c = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
      search(std::move(child));
    }
  }

  const Graph& g_;
  int n_;
  AdjacencyKey best_key_{};
  std::vector<int> best_labeling_;
};

}  // namespace mbdom::detail

/// position[v] = canonical index of vertex v.
inline std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw Error("canonical_form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                std::to_string(g.order()));
  if (g.order() == 0) return {};
  return detail::Canonizer(g).run();
}

/// The canonically relabeled copy of g.
inline Graph canonical_graph(const Graph& g) { return g.permuted(canonical_labeling(g)); }

inline CanonicalForm canonical_form(const Graph& g) { return {graph6_encode(canonical_graph(g))}; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Small-order enumeration

/// Largest order the built-in generator produces.
inline constexpr int kMaxBuiltinOrder = 7;

/**
 * One canonical representative per isomorphism class of graphs on n
 * vertices, sorted by certificate.
 *
 * Every graph on n vertices is some graph on n - 1 vertices plus a vertex,
 * and every connected one arises that way from a connected graph (delete a
 * non-cut vertex), so classes are grown one vertex at a time and deduplicated
 * by canonical form.
 */
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0 || n > kMaxBuiltinOrder)
    throw Error("built-in enumeration supports orders 1.." + std::to_string(kMaxBuiltinOrder) +
                "; supply larger corpora as graph6");
  std::set<CanonicalForm> level{canonical_form(Graph::empty(0))};
  for (int k = 1; k <= n; ++k) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& cf : level) {
      const Graph base = graph6_decode(cf.graph6);
      const int m = base.order();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (connected_only && mask == 0 && m > 0) continue;
        std::vector<Edge> es = base.edges();
        for (int u : VertexSet::from_bits(mask)) es.push_back({u, m});
        next.insert(canonical_form(Graph::from_edges(m + 1, es)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const CanonicalForm& cf : level) out.push_back(graph6_decode(cf.graph6));
  return out;
}

inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxBuiltinOrder)
    throw Error("enumerate_connected supports orders 1.." + std::to_string(kMaxBuiltinOrder) + ", got " +
                std::to_string(n));
  return enumerate_graphs(n, true);
}

}  // namespace mbdom
