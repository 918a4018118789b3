#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace mbdom {

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 1;

  static Edge make(int a, int b) {
    if (a == b) throw Error("loop edge at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  std::string to_string() const { return std::to_string(u) + "-" + std::to_string(v); }
  friend constexpr bool operator==(Edge, Edge) noexcept = default;
  friend constexpr auto operator<=>(Edge, Edge) noexcept = default;
};

/**
 * Simple undirected graph on at most 64 vertices, stored as one neighbor
 * word per vertex.
 *
 * Graphs are immutable values: every "edit" (edge deletion, induced
 * subgraph, join) returns a new graph. Symmetry, irreflexivity and the
 * absence of bits >= n are checked on every construction path.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws on out-of-range endpoints, loops and duplicate edges.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g = empty(n);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw Error("edge " + e.to_string() + " has an endpoint outside [0," + std::to_string(n) + ")");
      if (e.u == e.v) throw Error("loop edge at vertex " + std::to_string(e.u));
      if (g.adj_[e.u].contains(e.v)) throw Error("duplicate edge " + e.to_string());
      g.adj_[e.u].insert(e.v);
      g.adj_[e.v].insert(e.u);
    }
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from raw neighbor words; validates the adjacency invariants.
  static Graph from_adjacency(std::span<const VertexSet> adj) {
    Graph g = empty(static_cast<int>(adj.size()));
    std::copy(adj.begin(), adj.end(), g.adj_.begin());
    g.validate();
    return g;
  }

  /// Edgeless graph on n vertices; n = 0 is the null graph.
  static Graph empty(int n) {
    if (n < 0 || n > kMaxVertices)
      throw Error("vertex count " + std::to_string(n) + " outside [0,64]");
    Graph g;
    g.n_ = n;
    return g;
  }
  static Graph complete(int n) {
    Graph g = empty(n);
    for (int v = 0; v < n; ++v) g.adj_[v] = VertexSet::range(n) - VertexSet::singleton(v);
    return g;
  }
  static Graph path(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return from_edges(n, es);
  }
  static Graph cycle(int n) {
    if (n < 3) throw Error("a cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    es.push_back({0, n - 1});
    return from_edges(n, es);
  }
  /// K_{a,b}; the a-side is 0..a-1.
  static Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
      for (int v = a; v < a + b; ++v) es.push_back({u, v});
    return from_edges(a + b, es);
  }

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }

  /// Open neighborhood N(v).
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  /// Closed neighborhood N[v].
  VertexSet closed_neighborhood(int v) const {
    check_vertex(v);
    return adj_[v] | VertexSet::singleton(v);
  }
  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
  }
  int degree(int v) const { return neighbors(v).size(); }

  int min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, adj_[v].size());
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].size());
    return d;
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  /// Edges in (u, v) lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (v > u) out.push_back({u, v});
    return out;
  }

  /// Vertices of degree n - 1.
  VertexSet universal_vertices() const {
    VertexSet out;
    for (int v = 0; v < n_; ++v)
      if (adj_[v].size() == n_ - 1) out.insert(v);
    return out;
  }

  /// N[S] = union of closed neighborhoods of S.
  VertexSet closed_neighborhood(VertexSet s) const {
    VertexSet out = s;
    for (int v : s) out |= adj_[v];
    return out;
  }
  bool dominates(VertexSet s) const { return closed_neighborhood(s) == vertices(); }

  Graph delete_edge(Edge e) const {
    if (!adjacent(e.u, e.v)) throw Error("edge " + e.to_string() + " is not in the graph");
    Graph g = *this;
    g.adj_[e.u].erase(e.v);
    g.adj_[e.v].erase(e.u);
    return g;
  }
  Graph add_edge(Edge e) const {
    if (adjacent(e.u, e.v)) throw Error("edge " + e.to_string() + " already present");
    if (e.u == e.v) throw Error("loop edge at vertex " + std::to_string(e.u));
    Graph g = *this;
    g.adj_[e.u].insert(e.v);
    g.adj_[e.v].insert(e.u);
    return g;
  }

  /// Result of restricting to a vertex subset; `vertices[i]` is the host
  /// index of subgraph vertex i.
  struct Induced;
  Induced induced_subgraph(VertexSet s) const;

  /// Vertex set of G - S in host labels, for the `alive` overloads below.
  VertexSet without(VertexSet removed) const { return vertices() - removed; }

  /// Relabels: vertex v of this graph becomes perm[v].
  Graph permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
    Graph g = empty(n_);
    VertexSet seen;
    for (int v = 0; v < n_; ++v) {
      if (perm[v] < 0 || perm[v] >= n_ || seen.contains(perm[v])) throw Error("not a permutation");
      seen.insert(perm[v]);
    }
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u]) g.adj_[perm[u]].insert(perm[v]);
    return g;
  }

  Graph complement() const {
    Graph g = empty(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = vertices() - adj_[v] - VertexSet::singleton(v);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error("vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
  }
  void validate() const {
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
      if (!adj_[v].is_subset_of(all)) throw Error("adjacency of vertex " + std::to_string(v) + " has bits >= n");
      if (adj_[v].contains(v)) throw Error("loop at vertex " + std::to_string(v));
      for (int u : adj_[v])
        if (!adj_[u].contains(v)) throw Error("asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(u));
    }
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

struct Graph::Induced {
  Graph graph;
  std::vector<int> vertices;
};

inline Graph::Induced Graph::induced_subgraph(VertexSet s) const {
  if (!s.is_subset_of(vertices())) throw Error("induced_subgraph: set " + s.to_string() + " is not a vertex subset");
  Induced out;
  out.vertices = s.to_vector();
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < out.vertices.size(); ++i) index[out.vertices[i]] = static_cast<int>(i);
  out.graph = empty(static_cast<int>(out.vertices.size()));
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (int u : adj_[out.vertices[i]] & s) out.graph.adj_[i].insert(index[u]);
  return out;
}

// ---------------------------------------------------------------------------
// Structural predicates

/// Connected components of G restricted to `alive`, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> out;
  VertexSet left = alive & g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::singleton(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & left) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Vertices whose removal increases the number of components.
inline VertexSet cut_vertices(const Graph& g) {
  const std::size_t base = components(g).size();
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (components(g, g.without(VertexSet::singleton(v))).size() > base) out.insert(v);
  return out;
}

/// Edges whose removal increases the number of components.
inline std::vector<Edge> bridges(const Graph& g) {
  const std::size_t base = components(g).size();
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (components(g.delete_edge(e)).size() > base) out.push_back(e);
  return out;
}

inline bool is_bridge(const Graph& g, Edge e) {
  return components(g.delete_edge(e)).size() > components(g).size();
}

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

/// A proper 2-coloring (least vertex of each component in `first`), or none.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  Bipartition parts;
  for (VertexSet comp : components(g)) {
    VertexSet layer = VertexSet::singleton(comp.first());
    VertexSet seen = layer;
    bool even = true;
    while (!layer.empty()) {
      (even ? parts.first : parts.second) |= layer;
      VertexSet next;
      for (int v : layer) next |= g.neighbors(v);
      next -= seen;
      seen |= next;
      layer = next;
      even = !even;
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v).intersects(parts.first.contains(v) ? parts.first : parts.second)) return std::nullopt;
  return parts;
}

inline bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (v > u && (g.neighbors(u) & g.neighbors(v)).intersects(g.vertices() - VertexSet::range(v + 1)))
        return false;
  return true;
}

/// Disjoint union; h's vertices are shifted by n(g).
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxVertices) throw Error("disjoint union exceeds 64 vertices");
  std::vector<Edge> es = g.edges();
  for (Edge e : h.edges()) es.push_back({e.u + g.order(), e.v + g.order()});
  return Graph::from_edges(g.order() + h.order(), es);
}

/// G ∨ H: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxVertices) throw Error("join exceeds 64 vertices");
  std::vector<Edge> es = disjoint_union(g, h).edges();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) es.push_back({u, g.order() + v});
  return Graph::from_edges(g.order() + h.order(), es);
}

/// E(A, B) for disjoint A, B.
inline std::vector<Edge> edges_between(const Graph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw Error("edges_between: sets overlap in " + (a & b).to_string());
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) out.push_back(e);
  return out;
}

namespace detail {

template <class F>
bool for_each_k_subset(VertexSet pool, int k, VertexSet chosen, F& f) {
  if (k == 0) return f(chosen);
  if (pool.size() < k) return true;
  VertexSet rest = pool;
  for (int v : pool) {
    rest.erase(v);
    VertexSet with = chosen;
    with.insert(v);
    if (!for_each_k_subset(rest, k - 1, with, f)) return false;
  }
  return true;
}

}  // namespace detail

/// Calls f(S) for each k-subset S of `pool` in lexicographic order; stops
/// early when f returns false.
template <class F>
void for_each_k_subset(VertexSet pool, int k, F f) {
  detail::for_each_k_subset(pool, k, VertexSet{}, f);
}

/// γ(G) by exhaustive search in increasing cardinality.
inline int domination_number(const Graph& g) {
  for (int k = 0; k <= g.order(); ++k) {
    bool found = false;
    for_each_k_subset(g.vertices(), k, [&](VertexSet s) {
      found = g.dominates(s);
      return !found;
    });
    if (found) return k;
  }
  return g.order();
}

/// Every dominating set of size γ(G), in lexicographic order.
inline std::vector<VertexSet> minimum_dominating_sets(const Graph& g) {
  const int k = domination_number(g);
  std::vector<VertexSet> out;
  for_each_k_subset(g.vertices(), k, [&](VertexSet s) {
    if (g.dominates(s)) out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace mbdom
