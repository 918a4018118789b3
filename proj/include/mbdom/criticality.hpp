#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "canonical.hpp"
#include "families.hpp"
#include "game.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "solver.hpp"

namespace mbdom {

enum class Variant { DGame, SGame };

inline constexpr Player first_player(Variant v) noexcept {
  return v == Variant::DGame ? Player::Dominator : Player::Staller;
}

struct Invariants {
  GameValue gamma_mb;        // D-game
  GameValue gamma_mb_prime;  // S-game
};

inline Invariants mb_invariants(const Graph& g) {
  Solver solver(g);
  return {solver.value({}, Player::Dominator), solver.value({}, Player::Staller)};
}

struct Criticality {
  GameValue k;
  bool critical = false;
};

/**
 * k = the variant's invariant; critical iff k is finite and every edge
 * deletion pushes the invariant above k. An edgeless graph with a finite
 * value is critical by the empty quantifier.
 *
 * Deciding "G - e exceeds k" only needs a search capped at k.
 */
inline Criticality is_critical(const Graph& g, Variant variant, std::optional<GameValue> known = std::nullopt) {
  const Player first = first_player(variant);
  const GameValue k = known ? *known : game_value(g, {}, first);
  if (!k.is_finite()) return {k, false};
  for (const Edge& e : g.edges())
    if (!game_value_capped(g.delete_edge(e), {}, first, k.moves()).exceeds()) return {k, false};
  return {k, true};
}

/// n >= 5, δ >= 2 and Δ <= n - 2: what every connected 2-γ'_MB-critical
/// graph satisfies.
inline bool necessary_conditions(const Graph& g) {
  const int n = g.order();
  return n >= 5 && g.min_degree() >= 2 && g.max_degree() <= n - 2;
}

/// Per-graph census row.
struct ClassificationRecord {
  std::string canonical_id;
  int n = 0;
  bool connected = false;
  bool bipartite = false;
  bool triangle_free = false;
  bool has_cut_vertex = false;
  int gamma = 0;
  GameValue gamma_mb = GameValue::finite(0);
  GameValue gamma_mb_prime = GameValue::finite(0);
  bool critical_d = false;
  bool critical_s = false;
  FamilyMembership family;

  bool is_2_critical_s() const { return critical_s && gamma_mb_prime == GameValue::finite(2); }
  bool is_1_critical_s() const { return critical_s && gamma_mb_prime == GameValue::finite(1); }
};

/// Certificate used as the record key; graphs above the canonical-labeling
/// limit keep their input labeling.
inline std::string canonical_id(const Graph& g) {
  return g.order() <= kMaxCanonicalOrder ? canonical_form(g).graph6 : graph6_encode(g);
}

inline ClassificationRecord classify(const Graph& g) {
  ClassificationRecord r;
  r.canonical_id = canonical_id(g);
  r.n = g.order();
  r.connected = is_connected(g);
  r.bipartite = is_bipartite(g).has_value();
  r.triangle_free = is_triangle_free(g);
  r.has_cut_vertex = !cut_vertices(g).empty();
  r.gamma = domination_number(g);
  const Invariants inv = mb_invariants(g);
  r.gamma_mb = inv.gamma_mb;
  r.gamma_mb_prime = inv.gamma_mb_prime;
  r.critical_d = is_critical(g, Variant::DGame, inv.gamma_mb).critical;
  r.critical_s = is_critical(g, Variant::SGame, inv.gamma_mb_prime).critical;
  r.family = family_membership(g);
  return r;
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

inline Json to_json(GameValue v) { return v.is_finite() ? Json(v.moves()) : Json("inf"); }

inline GameValue game_value_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return GameValue::infinity();
  if (j.is_number_integer() && j.get<int>() >= 0) return GameValue::finite(j.get<int>());
  throw Error("bad game value in JSON: " + j.dump());
}

inline Json to_json(const FamilyMembership& f) {
  return Json{{"B", f.B}, {"F", f.F}, {"F_prime", f.Fprime}, {"C5", f.C5}, {"H_m", f.H}};
}

inline Json to_json(const ClassificationRecord& r) {
  return Json{{"canonical_id", r.canonical_id},
              {"n", r.n},
              {"connected", r.connected},
              {"bipartite", r.bipartite},
              {"triangle_free", r.triangle_free},
              {"has_cut_vertex", r.has_cut_vertex},
              {"gamma", r.gamma},
              {"gamma_mb", to_json(r.gamma_mb)},
              {"gamma_mb_prime", to_json(r.gamma_mb_prime)},
              {"critical_d", r.critical_d},
              {"critical_s", r.critical_s},
              {"family", to_json(r.family)}};
}

inline ClassificationRecord record_from_json(const Json& j) {
  ClassificationRecord r;
  r.canonical_id = j.at("canonical_id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.connected = j.at("connected").get<bool>();
  r.bipartite = j.at("bipartite").get<bool>();
  r.triangle_free = j.at("triangle_free").get<bool>();
  r.has_cut_vertex = j.at("has_cut_vertex").get<bool>();
  r.gamma = j.at("gamma").get<int>();
  r.gamma_mb = game_value_from_json(j.at("gamma_mb"));
  r.gamma_mb_prime = game_value_from_json(j.at("gamma_mb_prime"));
  r.critical_d = j.at("critical_d").get<bool>();
  r.critical_s = j.at("critical_s").get<bool>();
  const Json& f = j.at("family");
  r.family = {f.at("B").get<bool>(), f.at("F").get<bool>(), f.at("F_prime").get<bool>(), f.at("C5").get<bool>(),
              f.at("H_m").get<bool>()};
  return r;
}

}  // namespace mbdom
