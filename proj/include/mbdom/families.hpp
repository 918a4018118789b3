#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace mbdom {

/// Parameters violate a family's definition.
class FamilyError : public Error {
 public:
  using Error::Error;
};

enum class FamilyKind { H, B, F, Fprime, C5 };

inline const char* to_string(FamilyKind k) noexcept {
  switch (k) {
    case FamilyKind::H: return "H";
    case FamilyKind::B: return "B";
    case FamilyKind::F: return "F";
    case FamilyKind::Fprime: return "Fprime";
    case FamilyKind::C5: return "C5";
  }
  return "?";
}

/// A family member by parameters, e.g. "F:2,1,2" or "Fprime:3,4,5".
struct FamilySpec {
  FamilyKind kind = FamilyKind::H;
  std::vector<int> params;

  /// Throws FamilyError naming the violated constraint.
  void validate() const {
    auto need = [&](std::size_t count) {
      if (params.size() != count)
        throw FamilyError(std::string(mbdom::to_string(kind)) + " takes " + std::to_string(count) + " parameter(s), got " +
                          std::to_string(params.size()));
    };
    switch (kind) {
      case FamilyKind::H:
        need(1);
        if (params[0] < 0) throw FamilyError("m must be non-negative");
        if (params[0] == 1) throw FamilyError("m=1 is not allowed (m must be 0 or >=2)");
        break;
      case FamilyKind::B: {
        need(2);
        const int m = params[0], n = params[1];
        if (m == 2 && n < 3) throw FamilyError("m=2 requires n>=3");
        if (m != 2 && (m < 3 || n < 3)) throw FamilyError("B requires m=2 with n>=3, or m>=3 and n>=3");
        break;
      }
      case FamilyKind::F: {
        need(3);
        const int m1 = params[0], t = params[1], m2 = params[2];
        if (t < 1) throw FamilyError("t>=1 required");
        if (m1 < 0 || m1 == 1) throw FamilyError("m1 must be 0 or >=2");
        if (m2 < 2) throw FamilyError("m2>=2 required");
        if (m1 > m2) throw FamilyError("m1<=m2 required");
        if (m1 == 0 && t < 2) throw FamilyError("m1=0 requires t>=2");
        break;
      }
      case FamilyKind::Fprime:
        need(3);
        if (params[0] < 2) throw FamilyError("s>=2 required");
        if (params[1] < 2) throw FamilyError("q>=2 required");
        if (params[2] < 2) throw FamilyError("m>=2 required");
        break;
      case FamilyKind::C5:
        need(0);
        break;
    }
  }

  std::string to_string() const {
    std::string s = mbdom::to_string(kind);
    for (std::size_t i = 0; i < params.size(); ++i) s += (i == 0 ? ":" : ",") + std::to_string(params[i]);
    return s;
  }

  static FamilySpec parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    if (name == "H") spec.kind = FamilyKind::H;
    else if (name == "B") spec.kind = FamilyKind::B;
    else if (name == "F") spec.kind = FamilyKind::F;
    else if (name == "Fprime") spec.kind = FamilyKind::Fprime;
    else if (name == "C5") spec.kind = FamilyKind::C5;
    else throw FamilyError("unknown family '" + std::string(name) + "' (expected H, B, F, Fprime or C5)");
    if (colon != std::string_view::npos) {
      std::string_view rest = text.substr(colon + 1);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
          throw FamilyError("bad parameter '" + std::string(item) + "' in " + std::string(text));
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    spec.validate();
    return spec;
  }
};

/// A constructed graph together with the named vertex roles of its definition.
struct Construction {
  Graph graph;
  std::vector<std::pair<std::string, std::vector<int>>> roles;

  std::vector<int> role(std::string_view name) const {
    for (const auto& [n, vs] : roles)
      if (n == name) return vs;
    throw Error("no role named " + std::string(name));
  }
  int vertex(std::string_view name) const { return role(name).at(0); }
};

namespace detail {

// Appends `count` fresh vertices and returns their indices.
inline std::vector<int> fresh(int& next, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(next++);
  return out;
}

// Edges of H_m on the given vertices (vs[0], vs[1] are the universal pair).
inline void add_h_edges(const std::vector<int>& vs, std::vector<Edge>& es) {
  if (vs.size() < 2) return;
  es.push_back(Edge::make(vs[0], vs[1]));
  for (std::size_t i = 2; i < vs.size(); ++i) {
    es.push_back(Edge::make(vs[0], vs[i]));
    es.push_back(Edge::make(vs[1], vs[i]));
  }
}

inline std::vector<int> head(const std::vector<int>& vs, std::size_t k) {
  return {vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(std::min(k, vs.size()))};
}

}  // namespace detail

/// H_m = K_2 ∨ complement(K_{m-2}); H_2 = K_2 and H_0 is the null graph.
inline Construction build_H(int m) {
  FamilySpec{FamilyKind::H, {m}}.validate();
  int next = 0;
  const auto vs = detail::fresh(next, m);
  std::vector<Edge> es;
  detail::add_h_edges(vs, es);
  return {Graph::from_edges(m, es),
          {{"universal", detail::head(vs, 2)}, {"rest", std::vector<int>(vs.begin() + std::min<int>(2, m), vs.end())}}};
}

/**
 * Family B member. For m = 2 this is K_{2,n}. For m, n >= 3 the parts have
 * sizes m and n; two "full" vertices per part see the whole other part and
 * every remaining vertex is adjacent to exactly the two full vertices
 * across. That is the only way to meet the degree conditions: a degree-2
 * vertex of V1 already has both full V2 vertices as neighbors.
 */
inline Construction build_B(int m, int n) {
  FamilySpec{FamilyKind::B, {m, n}}.validate();
  int next = 0;
  const auto v1 = detail::fresh(next, m);
  const auto v2 = detail::fresh(next, n);
  std::vector<Edge> es;
  for (int a : v1)
    for (int b : v2) {
      const bool a_full = m == 2 || a == v1[0] || a == v1[1];
      const bool b_full = b == v2[0] || b == v2[1];
      if (m == 2 || a_full || b_full) es.push_back(Edge::make(a, b));
    }
  return {Graph::from_edges(m + n, es),
          {{"V1", v1}, {"V2", v2}, {"V1_full", detail::head(v1, 2)}, {"V2_full", m == 2 ? v2 : detail::head(v2, 2)}}};
}

/// F_{m1,t,m2}: v1 and v2 share the t common neighbors B; v1 is joined to
/// all of H_{m1}, v2 to all of H_{m2}.
inline Construction build_F(int m1, int t, int m2) {
  FamilySpec{FamilyKind::F, {m1, t, m2}}.validate();
  int next = 0;
  const int v1 = next++;
  const int v2 = next++;
  const auto b = detail::fresh(next, t);
  const auto h1 = detail::fresh(next, m1);
  const auto h2 = detail::fresh(next, m2);
  std::vector<Edge> es;
  for (int w : b) {
    es.push_back(Edge::make(v1, w));
    es.push_back(Edge::make(v2, w));
  }
  for (int w : h1) es.push_back(Edge::make(v1, w));
  for (int w : h2) es.push_back(Edge::make(v2, w));
  detail::add_h_edges(h1, es);
  detail::add_h_edges(h2, es);
  return {Graph::from_edges(next, es),
          {{"v1", {v1}},
           {"v2", {v2}},
           {"B", b},
           {"H1", h1},
           {"H1_universal", detail::head(h1, 2)},
           {"H2", h2},
           {"H2_universal", detail::head(h2, 2)}}};
}

/**
 * F'_{s,q,m}: P is K_{2,s} with side {a, b} plus q-2 further vertices
 * b_1..b_{q-2}; Q = K_1 ∨ P with apex v1; x is adjacent to all of H_m and
 * to a, b, b_1, ..., b_{q-2}.
 */
inline Construction build_Fprime(int s, int q, int m) {
  FamilySpec{FamilyKind::Fprime, {s, q, m}}.validate();
  int next = 0;
  const int v1 = next++;
  const int a = next++;
  const int b = next++;
  const auto side = detail::fresh(next, s);
  const auto extra = detail::fresh(next, q - 2);
  const int x = next++;
  const auto h = detail::fresh(next, m);
  std::vector<Edge> es;
  for (int c : side) {
    es.push_back(Edge::make(a, c));
    es.push_back(Edge::make(b, c));
  }
  for (int w : {a, b}) es.push_back(Edge::make(v1, w));
  for (int w : side) es.push_back(Edge::make(v1, w));
  for (int w : extra) es.push_back(Edge::make(v1, w));
  for (int w : {a, b}) es.push_back(Edge::make(x, w));
  for (int w : extra) es.push_back(Edge::make(x, w));
  for (int w : h) es.push_back(Edge::make(x, w));
  detail::add_h_edges(h, es);
  return {Graph::from_edges(next, es),
          {{"v1", {v1}},
           {"a", {a}},
           {"b", {b}},
           {"S", side},
           {"extra", extra},
           {"x", {x}},
           {"H", h},
           {"H_universal", detail::head(h, 2)}}};
}

inline Construction build(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::H: return build_H(p[0]);
    case FamilyKind::B: return build_B(p[0], p[1]);
    case FamilyKind::F: return build_F(p[0], p[1], p[2]);
    case FamilyKind::Fprime: return build_Fprime(p[0], p[1], p[2]);
    case FamilyKind::C5: return {Graph::cycle(5), {}};
  }
  throw Error("unknown family");
}

// ---------------------------------------------------------------------------
// Recognition (up to isomorphism), by searching for a role assignment that
// satisfies every adjacency of the definition.

/// m such that G ≅ H_m, if any.
inline std::optional<int> recognize_H(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const VertexSet u = g.universal_vertices();
  if (n < 2 || u.size() < 2) return std::nullopt;
  VertexSet pair;
  pair.insert(u.first());
  pair.insert((u - pair).first());
  for (int v : g.vertices() - pair)
    if (!(g.neighbors(v) - pair).empty()) return std::nullopt;
  return n;
}

/// (m, n), m <= n, such that G is a member of B with parts of those sizes.
inline std::optional<std::pair<int, int>> recognize_B(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return std::nullopt;
  const auto parts = is_bipartite(g);
  if (!parts) return std::nullopt;
  int p = parts->first.size();
  int q = parts->second.size();
  const auto sorted = std::pair{std::min(p, q), std::max(p, q)};
  if (sorted.first == 2) {
    if (sorted.second >= 3 && g.edge_count() == p * q) return sorted;
    return std::nullopt;
  }
  if (p < 3 || q < 3) return std::nullopt;
  auto side_ok = [&](VertexSet side, int full_degree) {
    int full = 0;
    for (int v : side) {
      const int d = g.degree(v);
      if (d == full_degree) ++full;
      else if (d != 2) return false;
    }
    return full == 2;
  };
  if (side_ok(parts->first, q) && side_ok(parts->second, p)) return sorted;
  return std::nullopt;
}

struct FParams {
  int m1, t, m2;
  friend bool operator==(const FParams&, const FParams&) = default;
};

inline std::optional<FParams> recognize_F(const Graph& g) {
  const int n = g.order();
  for (int v1 = 0; v1 < n; ++v1) {
    for (int v2 = v1 + 1; v2 < n; ++v2) {
      if (g.adjacent(v1, v2)) continue;
      const VertexSet ends{v1, v2};
      const VertexSet common = g.neighbors(v1) & g.neighbors(v2);
      if (common.empty()) continue;
      bool ok = true;
      for (int w : common) ok = ok && g.neighbors(w) == ends;
      if (!ok) continue;
      const VertexSet r1 = g.neighbors(v1) - common;
      const VertexSet r2 = g.neighbors(v2) - common;
      if ((ends | common | r1 | r2) != g.vertices()) continue;
      for (int r : r1) ok = ok && g.neighbors(r).is_subset_of(r1 | VertexSet::singleton(v1));
      for (int r : r2) ok = ok && g.neighbors(r).is_subset_of(r2 | VertexSet::singleton(v2));
      if (!ok) continue;
      if (!recognize_H(g.induced_subgraph(r1).graph) || !recognize_H(g.induced_subgraph(r2).graph)) continue;
      FParams f{std::min(r1.size(), r2.size()), common.size(), std::max(r1.size(), r2.size())};
      if (f.m2 < 2 || (f.m1 == 0 && f.t < 2)) continue;
      return f;
    }
  }
  return std::nullopt;
}

struct FprimeParams {
  int s, q, m;
  friend bool operator==(const FprimeParams&, const FprimeParams&) = default;
};

inline std::optional<FprimeParams> recognize_Fprime(const Graph& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int v1 = 0; v1 < n; ++v1) {
      if (v1 == x || g.adjacent(x, v1)) continue;
      const VertexSet hub{x, v1};
      const VertexSet shared = g.neighbors(x) & g.neighbors(v1);
      const VertexSet h = g.neighbors(x) - shared;
      const VertexSet side = g.neighbors(v1) - shared;
      if (shared.size() < 2 || h.size() < 2 || side.size() < 2) continue;
      if ((hub | g.neighbors(x) | g.neighbors(v1)) != g.vertices()) continue;

      bool ok = true;
      for (int w : h) ok = ok && g.neighbors(w).is_subset_of(h | VertexSet::singleton(x));
      if (!ok || !recognize_H(g.induced_subgraph(h).graph)) continue;

      const VertexSet ab = g.neighbors(side.first()) - VertexSet::singleton(v1);
      if (ab.size() != 2 || !ab.is_subset_of(shared)) continue;
      for (int c : side) ok = ok && g.neighbors(c) == (ab | VertexSet::singleton(v1));
      for (int w : shared - ab) ok = ok && g.neighbors(w) == hub;
      for (int w : ab) ok = ok && g.neighbors(w) == (hub | side);
      if (!ok) continue;
      return FprimeParams{side.size(), shared.size(), h.size()};
    }
  }
  return std::nullopt;
}

inline bool is_C5(const Graph& g) {
  return g.order() == 5 && g.edge_count() == 5 && canonical_form(g) == canonical_form(Graph::cycle(5));
}

struct FamilyMembership {
  bool B = false;
  bool F = false;
  bool Fprime = false;
  bool C5 = false;
  bool H = false;

  friend bool operator==(const FamilyMembership&, const FamilyMembership&) = default;

  /// Names of the families G belongs to, e.g. "B" or "F,Fprime"; "-" if none.
  std::string to_string() const {
    std::string s;
    auto add = [&](bool flag, const char* name) {
      if (!flag) return;
      if (!s.empty()) s += ',';
      s += name;
    };
    add(B, "B");
    add(F, "F");
    add(Fprime, "Fprime");
    add(C5, "C5");
    add(H, "H");
    return s.empty() ? "-" : s;
  }
};

inline FamilyMembership family_membership(const Graph& g) {
  FamilyMembership m;
  m.B = recognize_B(g).has_value();
  m.F = recognize_F(g).has_value();
  m.Fprime = recognize_Fprime(g).has_value();
  m.C5 = is_C5(g);
  m.H = recognize_H(g).has_value();
  return m;
}

}  // namespace mbdom
