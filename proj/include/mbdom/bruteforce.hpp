#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "game.hpp"
#include "graph.hpp"

// Reference game solver over concrete claim histories. It shares no code
// with Solver: no position abstraction, no memo table, no move ordering and
// no pruning, only the rules of the game. Exponential in n; meant for n <= 7.

namespace mbdom {

namespace detail {

enum class Owner : unsigned char { Free, Dominator, Staller };

struct History {
  const Graph* g;
  std::vector<bool> predominated;
  std::vector<Owner> owner;
};

inline bool in_closed_neighborhood(const Graph& g, int center, int u) { return u == center || g.adjacent(center, u); }

inline bool dominator_has_won(const History& h) {
  const int n = h.g->order();
  for (int v = 0; v < n; ++v) {
    if (h.predominated[v]) continue;
    bool covered = false;
    for (int u = 0; u < n && !covered; ++u)
      covered = h.owner[u] == Owner::Dominator && in_closed_neighborhood(*h.g, v, u);
    if (!covered) return false;
  }
  return true;
}

inline bool staller_has_won(const History& h) {
  const int n = h.g->order();
  for (int v = 0; v < n; ++v) {
    if (h.predominated[v]) continue;
    bool all_staller = true;
    for (int u = 0; u < n && all_staller; ++u)
      if (in_closed_neighborhood(*h.g, v, u)) all_staller = h.owner[u] == Owner::Staller;
    if (all_staller) return true;
  }
  return false;
}

// Additional Dominator moves under optimal play from this history.
inline GameValue continue_history(History& h, Player turn) {
  if (dominator_has_won(h)) return GameValue::finite(0);
  if (staller_has_won(h)) return GameValue::infinity();
  const int n = h.g->order();
  std::optional<GameValue> best;
  for (int v = 0; v < n; ++v) {
    if (h.owner[v] != Owner::Free) continue;
    h.owner[v] = turn == Player::Dominator ? Owner::Dominator : Owner::Staller;
    GameValue child = continue_history(h, opponent(turn));
    h.owner[v] = Owner::Free;
    if (turn == Player::Dominator) child = child.plus(1);
    if (!best || (turn == Player::Dominator ? child < *best : child > *best)) best = child;
  }
  // With no free vertex left one of the win conditions has already fired.
  return best.value_or(GameValue::infinity());
}

}  // namespace detail

/// Additional Dominator moves from the concrete history (dom, stal) with
/// `turn` to move.
inline GameValue bruteforce_continuation(const Graph& g, VertexSet predominated, VertexSet dom, VertexSet stal,
                                         Player turn) {
  detail::History h{&g, std::vector<bool>(g.order(), false),
                    std::vector<detail::Owner>(g.order(), detail::Owner::Free)};
  for (int v : predominated) h.predominated[v] = true;
  for (int v : dom) h.owner[v] = detail::Owner::Dominator;
  for (int v : stal) {
    if (h.owner[v] != detail::Owner::Free) throw Error("vertex claimed twice in history");
    h.owner[v] = detail::Owner::Staller;
  }
  return detail::continue_history(h, turn);
}

inline GameValue game_value_bruteforce(const Graph& g, VertexSet predominated, Player first) {
  return bruteforce_continuation(g, predominated, {}, {}, first);
}

}  // namespace mbdom
