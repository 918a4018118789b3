#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>

#include "game.hpp"
#include "graph.hpp"

namespace mbdom {

/// Answer to "is the game value at most cap?".
class CappedValue {
 public:
  static CappedValue at_most(int k) { return CappedValue(k); }
  static CappedValue exceeds_cap() { return CappedValue(std::nullopt); }

  bool exceeds() const noexcept { return !value_.has_value(); }
  /// The exact value; only meaningful when !exceeds().
  int value() const {
    if (!value_) throw Error("CappedValue::value() on ExceedsCap");
    return *value_;
  }
  std::string to_string() const { return value_ ? "AtMost(" + std::to_string(*value_) + ")" : "ExceedsCap"; }
  friend bool operator==(const CappedValue&, const CappedValue&) = default;

 private:
  explicit CappedValue(std::optional<int> v) : value_(v) {}
  std::optional<int> value_;
};

/**
 * Exact minimax solver for the Maker-Breaker domination game on one graph.
 *
 * The value V(U, A, turn) of a position with undominated set U and
 * available set A is
 *
 *   0                                   if U is empty
 *   infinity                            if some v in U has N[v] ∩ A empty
 *   min_a 1 + V(U - N[a], A - a, S)     Dominator to move
 *   max_a V(U, A - a, D)                Staller to move
 *
 * Every search carries a budget: the caller only wants the exact value when
 * it is at most the budget, and otherwise a lower bound exceeding it. The
 * transposition table keeps, per (U, A, turn), either the exact value or
 * the best lower bound proved so far, so bounded queries (criticality) and
 * unbounded ones (invariants) share one table.
 *
 * A Solver is single-threaded; give each worker its own instance.
 */
class Solver {
 public:
  explicit Solver(Graph g) : g_(std::move(g)) {
    for (int v = 0; v < g_.order(); ++v) closed_[v] = g_.closed_neighborhood(v);
  }

  const Graph& graph() const noexcept { return g_; }
  std::size_t table_size() const noexcept { return table_.size(); }
  std::uint64_t nodes_searched() const noexcept { return nodes_; }

  /// γ_MB(G|X) for first = Dominator, γ'_MB(G|X) for first = Staller.
  GameValue value(VertexSet predominated, Player first) {
    return value(make_position(g_, predominated, first));
  }
  GameValue value(const Position& p) {
    check_host(p);
    const Bound b = search(p.undominated, p.available, p.turn, kUnbounded);
    return GameValue::from_code(b.lower);
  }

  /// Decides value <= cap, returning the exact value when it is.
  CappedValue value_capped(VertexSet predominated, Player first, int cap) {
    return value_capped(make_position(g_, predominated, first), cap);
  }
  CappedValue value_capped(const Position& p, int cap) {
    if (cap < 0) throw Error("cap must be non-negative");
    check_host(p);
    const Bound b = search(p.undominated, p.available, p.turn, std::min(cap, kMaxBudget));
    if (b.exact && b.lower <= cap) return CappedValue::at_most(b.lower);
    return CappedValue::exceeds_cap();
  }

  /// Moves attaining the minimax value for the player to move.
  VertexSet optimal_moves(const Position& p) {
    check_host(p);
    if (terminal_status(p) != Status::Ongoing) throw Error("optimal_moves called on a terminal position");
    const GameValue target = value(p);
    VertexSet out;
    for (int a : p.available) {
      const GameValue child = value(p.play(a));
      const GameValue through = p.turn == Player::Dominator ? child.plus(1) : child;
      if (through == target) out.insert(a);
    }
    return out;
  }

  /// Optimal play from p with both sides taking the lowest-index optimal move.
  MoveTranscript principal_line(Position p) {
    MoveTranscript t;
    t.outcome = value(p);
    while (terminal_status(p) == Status::Ongoing) {
      const int v = optimal_moves(p).first();
      t.moves.push_back({p.turn, v});
      p = p.play(v);
    }
    return t;
  }

  void clear() { table_.clear(); }

 private:
  static constexpr int kInf = GameValue::kInfinityCode;
  // Budget meaning "compute exactly"; finite values never exceed 64.
  static constexpr int kUnbounded = kInf;
  static constexpr int kMaxBudget = kMaxVertices;

  struct Key {
    std::uint64_t undominated;
    std::uint64_t available;
    Player turn;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    static std::uint64_t mix(std::uint64_t x) noexcept {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    }
    std::size_t operator()(const Key& k) const noexcept {
      return mix(k.undominated ^ mix(k.available ^ (k.turn == Player::Staller ? 0x5bd1e995ULL : 0)));
    }
  };
  // exact: the value is `lower`. Otherwise the value is >= lower.
  struct Bound {
    std::uint8_t lower = 0;
    bool exact = false;
  };

  void check_host(const Position& p) const {
    if (!(p.host == g_)) throw Error("position belongs to a different graph");
  }

  static int sub1(int budget) { return budget == kInf ? kInf : budget - 1; }

  // ceil(|U| / best coverage): no move covers more than the best current one.
  int coverage_lower_bound(VertexSet u, VertexSet a) const {
    int best = 0;
    for (int v : a) best = std::max(best, (closed_[v] & u).size());
    return best == 0 ? kInf : (u.size() + best - 1) / best;
  }

  Bound search(VertexSet u, VertexSet a, Player turn, int budget) {
    if (u.empty()) return {0, true};
    for (int v : u)
      if (!closed_[v].intersects(a)) return {static_cast<std::uint8_t>(kInf), true};

    const Key key{u.bits(), a.bits(), turn};
    if (auto it = table_.find(key); it != table_.end()) {
      const Bound b = it->second;
      if (b.exact || b.lower > budget) return b;
    }
    ++nodes_;

    Bound result;
    const int need = coverage_lower_bound(u, a);
    if (need > budget) {
      result = {static_cast<std::uint8_t>(need), false};
    } else if (turn == Player::Dominator) {
      result = dominator_node(u, a, budget);
    } else {
      result = staller_node(u, a, budget);
    }
    Bound& slot = table_[key];
    if (result.exact || !slot.exact) {
      if (!result.exact) result.lower = std::max(result.lower, slot.lower);
      slot = result;
    }
    return result;
  }

  Bound dominator_node(VertexSet u, VertexSet a, int budget) {
    std::array<std::pair<int, int>, kMaxVertices> order{};
    int count = 0;
    for (int v : a) order[count++] = {-(closed_[v] & u).size(), v};
    std::sort(order.begin(), order.begin() + count);

    int best = kInf + 1;  // smallest exact total seen; kInf + 1 = none yet
    int inexact_min = kInf + 1;
    int child_budget = sub1(budget);
    for (int i = 0; i < count; ++i) {
      const int v = order[i].second;
      const Bound r = search(u - closed_[v], a - VertexSet::singleton(v), Player::Staller, child_budget);
      if (r.exact) {
        const int total = r.lower == kInf ? kInf : r.lower + 1;
        if (total < best) {
          best = total;
          if (best != kInf) {
            if (best <= 1) break;
            child_budget = std::min(child_budget, best - 2);
          }
        }
      } else {
        inexact_min = std::min(inexact_min, r.lower + 1);
      }
    }
    if (best <= budget || inexact_min > kInf) return {static_cast<std::uint8_t>(std::min(best, kInf)), true};
    return {static_cast<std::uint8_t>(std::min({best, inexact_min, kInf})), false};
  }

  Bound staller_node(VertexSet u, VertexSet a, int budget) {
    // Claim first where it leaves an undominated vertex closest to isolation.
    std::array<std::pair<std::pair<int, int>, int>, kMaxVertices> order{};
    int count = 0;
    for (int v : a) {
      int threat = 0;
      for (int w : closed_[v] & u)
        if ((closed_[w] & a).size() <= 2) ++threat;
      order[count++] = {{-threat, -(closed_[v] & u).size()}, v};
    }
    std::sort(order.begin(), order.begin() + count);

    int best = 0;
    for (int i = 0; i < count; ++i) {
      const int v = order[i].second;
      const Bound r = search(u, a - VertexSet::singleton(v), Player::Dominator, budget);
      if (!r.exact) return r;
      best = std::max<int>(best, r.lower);
      if (best == kInf) break;
    }
    return {static_cast<std::uint8_t>(best), true};
  }

  Graph g_;
  std::array<VertexSet, kMaxVertices> closed_{};
  std::unordered_map<Key, Bound, KeyHash> table_;
  std::uint64_t nodes_ = 0;
};

/// γ_MB(G|X) / γ'_MB(G|X) with a fresh solver.
inline GameValue game_value(const Graph& g, VertexSet predominated, Player first) {
  return Solver(g).value(predominated, first);
}

inline CappedValue game_value_capped(const Graph& g, VertexSet predominated, Player first, int cap) {
  return Solver(g).value_capped(predominated, first, cap);
}

inline VertexSet optimal_moves(const Position& p) { return Solver(p.host).optimal_moves(p); }

/**
 * True when V1, V2 partition V(G) and each induced half has at least two
 * universal vertices. Dominator then wins the S-game in two moves by
 * answering inside the pair Staller just touched.
 */
inline bool pairing_bound(const Graph& g, VertexSet v1, VertexSet v2) {
  if (v1.intersects(v2) || (v1 | v2) != g.vertices())
    throw Error("pairing_bound: " + v1.to_string() + " and " + v2.to_string() + " do not partition V(G)");
  return g.induced_subgraph(v1).graph.universal_vertices().size() >= 2 &&
         g.induced_subgraph(v2).graph.universal_vertices().size() >= 2;
}

}  // namespace mbdom
