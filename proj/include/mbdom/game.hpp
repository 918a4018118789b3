#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace mbdom {

enum class Player : std::uint8_t { Dominator, Staller };

inline constexpr Player opponent(Player p) noexcept {
  return p == Player::Dominator ? Player::Staller : Player::Dominator;
}
inline const char* to_string(Player p) noexcept { return p == Player::Dominator ? "Dominator" : "Staller"; }

/**
 * Extended natural number: the number of moves Dominator makes under optimal
 * play, or infinity when Staller wins. Infinity is the top element and
 * absorbs addition.
 */
class GameValue {
 public:
  static constexpr GameValue finite(int k) noexcept { return GameValue(k); }
  static constexpr GameValue infinity() noexcept { return GameValue(kInfinityCode); }

  constexpr bool is_finite() const noexcept { return code_ != kInfinityCode; }
  constexpr bool is_infinite() const noexcept { return code_ == kInfinityCode; }
  int moves() const {
    if (!is_finite()) throw Error("GameValue::moves() on infinity");
    return code_;
  }

  constexpr GameValue plus(int k) const noexcept { return is_finite() ? GameValue(code_ + k) : *this; }

  std::string to_string() const { return is_finite() ? std::to_string(code_) : "inf"; }

  friend constexpr bool operator==(GameValue, GameValue) noexcept = default;
  friend constexpr auto operator<=>(GameValue, GameValue) noexcept = default;

  /// Raw encoding used by transposition tables: 0..64, or 255 for infinity.
  static constexpr int kInfinityCode = 255;
  constexpr int code() const noexcept { return code_; }
  static constexpr GameValue from_code(int c) noexcept { return GameValue(c); }

 private:
  constexpr explicit GameValue(int c) noexcept : code_(c) {}
  int code_ = 0;
};

enum class Status { DominatorWon, StallerWon, Ongoing };

inline const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::DominatorWon: return "DominatorWon";
    case Status::StallerWon: return "StallerWon";
    case Status::Ongoing: return "Ongoing";
  }
  return "?";
}

/**
 * Abstract game state: the vertices still to be dominated, the vertices
 * nobody has claimed, and whose turn it is.
 *
 * Which vertices Dominator holds matters only through what they already
 * dominate, and Staller's claims only through which vertices are no longer
 * available, so (undominated, available, turn) determines every
 * continuation.
 */
struct Position {
  Graph host;
  VertexSet undominated;
  VertexSet available;
  Player turn = Player::Staller;

  /// Claims v for the player to move.
  Position play(int v) const {
    if (!available.contains(v)) throw Error("vertex " + std::to_string(v) + " is not available");
    Position next = *this;
    if (turn == Player::Dominator) next.undominated -= host.closed_neighborhood(v);
    next.available.erase(v);
    next.turn = opponent(turn);
    return next;
  }
};

/// Fresh position for G|X: vertices of X count as already dominated.
inline Position make_position(const Graph& g, VertexSet predominated, Player first) {
  if (!predominated.is_subset_of(g.vertices()))
    throw Error("predominated set " + predominated.to_string() + " is not a vertex subset");
  return Position{g, g.vertices() - predominated, g.vertices(), first};
}

/// Position reached by a concrete history where Dominator claimed `dom` and
/// Staller claimed `stal`.
inline Position position_from_history(const Graph& g, VertexSet predominated, VertexSet dom, VertexSet stal,
                                      Player turn) {
  if (dom.intersects(stal)) throw Error("a vertex was claimed by both players");
  Position p = make_position(g, predominated, turn);
  p.undominated -= g.closed_neighborhood(dom);
  p.available -= dom | stal;
  return p;
}

namespace detail {

inline Status terminal_status(const Graph& g, VertexSet undominated, VertexSet available) {
  if (undominated.empty()) return Status::DominatorWon;
  for (int v : undominated)
    if (!g.closed_neighborhood(v).intersects(available)) return Status::StallerWon;
  return Status::Ongoing;
}

}  // namespace detail

/// Dominator wins once nothing is undominated; Staller wins once some
/// undominated vertex has its whole closed neighborhood claimed by her.
inline Status terminal_status(const Position& p) {
  return detail::terminal_status(p.host, p.undominated, p.available);
}

struct Move {
  Player player;
  int vertex;
};

/// A line of play, written s1,d1,s2,d2,... (or d1,s1,... for the D-game).
struct MoveTranscript {
  std::vector<Move> moves;
  GameValue outcome = GameValue::finite(0);

  std::string to_string() const {
    std::string out;
    int d = 0;
    int s = 0;
    for (const Move& m : moves) {
      if (!out.empty()) out += ' ';
      out += m.player == Player::Dominator ? "d" + std::to_string(++d) : "s" + std::to_string(++s);
      out += '=' + std::to_string(m.vertex);
    }
    return out;
  }
};

}  // namespace mbdom
