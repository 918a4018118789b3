#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "criticality.hpp"
#include "families.hpp"
#include "graph6.hpp"
#include "solver.hpp"

namespace mbdom {

enum class CheckName {
  thm_bip,
  thm_NoK3,
  thm_cutvertex,
  lemma_NoLeaves,
  one_critical_Hm,
  observation_o1,
  continuation_principle,
  lemma_doky,
  lemma_multipleuniversal,
  lemma_cut_triangle,
  prop_necessary,
  prop_familyF,
  prop_familyFprime,
  prop_allbridge,
};

inline constexpr CheckName kAllChecks[] = {
    CheckName::thm_bip,           CheckName::thm_NoK3,           CheckName::thm_cutvertex,
    CheckName::lemma_NoLeaves,    CheckName::one_critical_Hm,    CheckName::observation_o1,
    CheckName::continuation_principle, CheckName::lemma_doky,    CheckName::lemma_multipleuniversal,
    CheckName::lemma_cut_triangle, CheckName::prop_necessary,    CheckName::prop_familyF,
    CheckName::prop_familyFprime, CheckName::prop_allbridge,
};

inline const char* to_string(CheckName c) noexcept {
  switch (c) {
    case CheckName::thm_bip: return "thm_bip";
    case CheckName::thm_NoK3: return "thm_NoK3";
    case CheckName::thm_cutvertex: return "thm_cutvertex";
    case CheckName::lemma_NoLeaves: return "lemma_NoLeaves";
    case CheckName::one_critical_Hm: return "one_critical_Hm";
    case CheckName::observation_o1: return "observation_o1";
    case CheckName::continuation_principle: return "continuation_principle";
    case CheckName::lemma_doky: return "lemma_doky";
    case CheckName::lemma_multipleuniversal: return "lemma_multipleuniversal";
    case CheckName::lemma_cut_triangle: return "lemma_cut_triangle";
    case CheckName::prop_necessary: return "prop_necessary";
    case CheckName::prop_familyF: return "prop_familyF";
    case CheckName::prop_familyFprime: return "prop_familyFprime";
    case CheckName::prop_allbridge: return "prop_allbridge";
  }
  return "?";
}

inline std::optional<CheckName> parse_check_name(std::string_view s) {
  for (CheckName c : kAllChecks)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

/// Comma-separated names, or "all".
inline std::vector<CheckName> parse_check_list(std::string_view s) {
  if (s == "all") return {std::begin(kAllChecks), std::end(kAllChecks)};
  std::vector<CheckName> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = s.substr(0, comma);
    const auto c = parse_check_name(item);
    if (!c) throw Error("unknown check '" + std::string(item) + "'");
    out.push_back(*c);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

/// A failed check with enough witness to re-run it by hand.
struct Violation {
  std::string canonical_id;
  std::string graph6;
  std::string check;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  /// (G, B ⊆ A) samples drawn per graph for the Continuation Principle.
  int continuation_samples = 500;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Violation make_violation(const Graph& g, const ClassificationRecord& r, CheckName c, std::string detail) {
  return {r.canonical_id, graph6_encode(g), to_string(c), std::move(detail)};
}

// Components of G - x.
inline std::vector<VertexSet> split_at(const Graph& g, int x) {
  return components(g, g.without(VertexSet::singleton(x)));
}

// Universal vertices of G[c] in host labels.
inline VertexSet universal_in(const Graph& g, VertexSet c) {
  VertexSet out;
  for (int v : c)
    if (c.is_subset_of(g.closed_neighborhood(v))) out.insert(v);
  return out;
}

// G ≅ H_2 ⊔ H_m for some m >= 2.
inline bool is_H2_plus_Hm(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() != 2) return false;
  const Graph a = g.induced_subgraph(comps[0]).graph;
  const Graph b = g.induced_subgraph(comps[1]).graph;
  auto is_k2 = [](const Graph& h) { return h.order() == 2 && h.edge_count() == 1; };
  auto is_hm = [](const Graph& h) { return h.order() >= 2 && recognize_H(h).has_value(); };
  return (is_k2(a) && is_hm(b)) || (is_k2(b) && is_hm(a));
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

// The three cut-vertex propositions whose joint coverage makes up the
// converse direction of the cut-vertex characterization. Each is checked
// for every cut-vertex x splitting G into exactly two parts, in both
// orders of the parts.
inline std::optional<std::string> cutvertex_subcases(const Graph& g, const ClassificationRecord& r) {
  const bool crit = r.is_2_critical_s();
  const bool in_family = r.family.F || r.family.Fprime;
  for (int x : cut_vertices(g)) {
    const auto parts = split_at(g, x);
    if (parts.size() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      const VertexSet c1 = parts[side];
      const VertexSet c2 = parts[1 - side];
      const VertexSet u1 = universal_in(g, c1);
      const VertexSet u2 = universal_in(g, c2);
      const VertexSet nx = g.neighbors(x);
      for (int v1 : u1) {
        if (!nx.contains(v1)) continue;
        const bool bridge = is_bridge(g, Edge::make(v1, x));
        if (bridge && g.degree(x) >= 3 && crit)
          return "v1xbridge: x=" + std::to_string(x) + " v1=" + std::to_string(v1) + " but G is 2-critical";
        if (!bridge && u1.size() <= u2.size() && crit)
          return "v1xnotbridge: x=" + std::to_string(x) + " v1=" + std::to_string(v1) + " but G is 2-critical";
      }
      if (crit && (u2 & nx).size() >= 2 && !u1.intersects(nx) && !in_family)
        return "xadjacentv2v3: x=" + std::to_string(x) + " but G is not in F or F'";
    }
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * Instantiates one characterization at G. Equivalences are checked in both
 * directions inside the statement's hypothesis class; graphs outside the
 * class pass vacuously.
 */
inline std::optional<Violation> check_characterization(CheckName name, const Graph& g, const ClassificationRecord& r) {
  using detail::yes_no;
  const bool crit2 = r.is_2_critical_s();
  auto fail = [&](std::string d) { return detail::make_violation(g, r, name, std::move(d)); };
  switch (name) {
    case CheckName::thm_bip:
      if (r.connected && r.bipartite && crit2 != r.family.B)
        return fail("2-critical=" + yes_no(crit2) + " in B=" + yes_no(r.family.B));
      return std::nullopt;
    case CheckName::thm_NoK3: {
      const bool member = r.family.B || r.family.C5;
      if (r.connected && r.triangle_free && crit2 != member)
        return fail("2-critical=" + yes_no(crit2) + " in B or C5=" + yes_no(member));
      return std::nullopt;
    }
    case CheckName::thm_cutvertex: {
      if (!r.connected || !r.has_cut_vertex) return std::nullopt;
      const bool member = r.family.F || r.family.Fprime;
      if (crit2 != member) return fail("2-critical=" + yes_no(crit2) + " in F or F'=" + yes_no(member));
      if (auto sub = detail::cutvertex_subcases(g, r)) return fail(*sub);
      return std::nullopt;
    }
    case CheckName::lemma_NoLeaves: {
      if (g.order() == 0 || g.min_degree() != 1) return std::nullopt;
      const bool shape = detail::is_H2_plus_Hm(g);
      if (crit2 != shape) return fail("2-critical=" + yes_no(crit2) + " H2+Hm=" + yes_no(shape));
      return std::nullopt;
    }
    case CheckName::one_critical_Hm: {
      if (g.order() == 0) return std::nullopt;
      const bool crit1 = r.is_1_critical_s();
      const bool hm = g.order() >= 2 && r.family.H;
      if (crit1 != hm) return fail("1-critical=" + yes_no(crit1) + " H_m=" + yes_no(hm));
      return std::nullopt;
    }
    case CheckName::prop_necessary:
      if (r.connected && crit2 && !necessary_conditions(g))
        return fail("n=" + std::to_string(g.order()) + " delta=" + std::to_string(g.min_degree()) +
                    " Delta=" + std::to_string(g.max_degree()));
      return std::nullopt;
    default:
      throw Error(std::string(to_string(name)) + " is not a characterization check");
  }
}

/**
 * Instantiates a lemma-style statement at G for every cut-vertex, edge or
 * sampled auxiliary set it quantifies over.
 */
inline std::optional<Violation> check_lemma_suite(CheckName name, const Graph& g, const ClassificationRecord& r,
                                                  const CheckOptions& opt = {}) {
  const bool crit2 = r.is_2_critical_s();
  auto fail = [&](std::string d) { return detail::make_violation(g, r, name, std::move(d)); };
  switch (name) {
    case CheckName::observation_o1: {
      if (!r.connected || !crit2) return std::nullopt;
      Solver solver(g);
      const VertexSet opt_moves = solver.optimal_moves(make_position(g, {}, Player::Staller));
      if (opt_moves != g.vertices()) return fail("optimal first Staller moves " + opt_moves.to_string());
      return std::nullopt;
    }
    case CheckName::continuation_principle: {
      std::mt19937_64 rng(detail::fnv1a(r.canonical_id, opt.seed));
      Solver solver(g);
      const std::uint64_t all = g.vertices().bits();
      for (int i = 0; i < opt.continuation_samples; ++i) {
        const VertexSet small = VertexSet::from_bits(rng() & all);
        const VertexSet big = small | VertexSet::from_bits(rng() & all);
        for (Player first : {Player::Dominator, Player::Staller}) {
          const GameValue vb = solver.value(small, first);
          const GameValue va = solver.value(big, first);
          if (va > vb)
            return fail(std::string(first == Player::Dominator ? "D" : "S") + "-game: value(G|" + big.to_string() +
                        ")=" + va.to_string() + " > value(G|" + small.to_string() + ")=" + vb.to_string());
        }
      }
      return std::nullopt;
    }
    case CheckName::lemma_doky:
      for (const Edge& e : g.edges()) {
        const Invariants minus = mb_invariants(g.delete_edge(e));
        if (minus.gamma_mb < r.gamma_mb || minus.gamma_mb_prime < r.gamma_mb_prime)
          return fail("edge " + e.to_string() + ": G=(" + r.gamma_mb.to_string() + "," + r.gamma_mb_prime.to_string() +
                      ") G-e=(" + minus.gamma_mb.to_string() + "," + minus.gamma_mb_prime.to_string() + ")");
      }
      return std::nullopt;
    case CheckName::lemma_multipleuniversal: {
      if (!r.connected || r.gamma_mb_prime != GameValue::finite(2)) return std::nullopt;
      for (int x : cut_vertices(g)) {
        const auto parts = detail::split_at(g, x);
        if (parts.size() != 2) return fail("G-" + std::to_string(x) + " has " + std::to_string(parts.size()) + " components");
        const int u1 = detail::universal_in(g, parts[0]).size();
        const int u2 = detail::universal_in(g, parts[1]).size();
        if (u1 < 1 || u2 < 1 || std::max(u1, u2) < 2)
          return fail("cut-vertex " + std::to_string(x) + ": universal counts " + std::to_string(u1) + "," +
                      std::to_string(u2));
      }
      return std::nullopt;
    }
    case CheckName::lemma_cut_triangle: {
      if (!r.connected || !crit2) return std::nullopt;
      for (int x : cut_vertices(g))
        for (VertexSet c : detail::split_at(g, x)) {
          if (!c.is_subset_of(g.neighbors(x)) || detail::universal_in(g, c).size() < 2) continue;
          const Graph part = g.induced_subgraph(c).graph;
          if (!(part.order() >= 2 && recognize_H(part)))
            return fail("cut-vertex " + std::to_string(x) + ": component " + c.to_string() + " is not some H_m");
        }
      return std::nullopt;
    }
    case CheckName::prop_allbridge: {
      if (!r.connected || !crit2) return std::nullopt;
      for (int x : cut_vertices(g)) {
        bool all_bridges = true;
        for (int y : g.neighbors(x)) all_bridges = all_bridges && is_bridge(g, Edge::make(x, y));
        if (!all_bridges) continue;
        const auto f = recognize_F(g);
        if (!f || f->t != 1 || f->m1 < 2)
          return fail("cut-vertex " + std::to_string(x) + " has only bridges but G is not F_{m1,1,m2} with m1>=2");
      }
      return std::nullopt;
    }
    case CheckName::prop_familyF:
      if (r.family.F && !crit2) return fail("member of F but not 2-critical");
      return std::nullopt;
    case CheckName::prop_familyFprime:
      if (r.family.Fprime && !crit2) return fail("member of F' but not 2-critical");
      return std::nullopt;
    default:
      return check_characterization(name, g, r);
  }
}

/// Dispatches to whichever of the two suites owns `name`.
inline std::optional<Violation> run_check(CheckName name, const Graph& g, const ClassificationRecord& r,
                                          const CheckOptions& opt = {}) {
  return check_lemma_suite(name, g, r, opt);
}

// ---------------------------------------------------------------------------
// Census

/// One census input: a graph, or the reason its line failed to decode.
struct CensusItem {
  std::optional<Graph> graph;
  std::size_t line_number = 0;
  std::string text;
  std::string error;
};

inline std::vector<CensusItem> census_items(const std::vector<Graph>& graphs) {
  std::vector<CensusItem> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back({g, 0, graph6_encode(g), {}});
  return out;
}

inline std::vector<CensusItem> census_items(const std::vector<Graph6Line>& lines) {
  std::vector<CensusItem> out;
  out.reserve(lines.size());
  for (const Graph6Line& l : lines) out.push_back({l.graph, l.line_number, l.text, l.error});
  return out;
}

struct CensusOptions {
  int jobs = 1;
  std::uint64_t seed = 1;
  /// Continuation Principle samples per order bucket, spread over its graphs.
  int continuation_samples_per_order = 500;
};

struct OrderTally {
  int graphs = 0;
  int critical_2 = 0;
};

struct CensusReport {
  std::string source;
  std::uint64_t seed = 1;
  std::vector<CheckName> checks;
  int total = 0;
  std::map<int, OrderTally> per_order;
  /// 2-γ'_MB-critical graphs, in input order.
  std::vector<ClassificationRecord> critical_list;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  Json to_json() const {
    Json j;
    j["source"] = source;
    j["seed"] = seed;
    Json names = Json::array();
    for (CheckName c : checks) names.push_back(mbdom::to_string(c));
    j["checks"] = names;
    j["total"] = total;
    Json tallies = Json::object();
    for (const auto& [n, t] : per_order) tallies[std::to_string(n)] = Json{{"graphs", t.graphs}, {"critical_2", t.critical_2}};
    j["per_order"] = tallies;
    Json crit = Json::array();
    for (const auto& r : critical_list) crit.push_back(mbdom::to_json(r));
    j["critical_list"] = crit;
    j["violations"] = violations_json();
    return j;
  }

  Json violations_json() const {
    Json v = Json::array();
    for (const auto& x : violations)
      v.push_back(Json{{"canonical_id", x.canonical_id}, {"graph6", x.graph6}, {"check", x.check}, {"detail", x.detail}});
    return v;
  }

  /// critical_list as JSON lines.
  std::string criticals_jsonl() const {
    std::string out;
    for (const auto& r : critical_list) out += mbdom::to_json(r).dump() + "\n";
    return out;
  }

  std::string violations_table() const {
    std::ostringstream os;
    if (violations.empty()) {
      os << "no violations\n";
      return os.str();
    }
    os << "check                     graph6        detail\n";
    for (const auto& v : violations) {
      std::string check = v.check;
      check.resize(std::max<std::size_t>(check.size(), 25), ' ');
      std::string g6 = v.graph6;
      g6.resize(std::max<std::size_t>(g6.size(), 13), ' ');
      os << check << ' ' << g6 << ' ' << v.detail << '\n';
    }
    return os.str();
  }
};

/**
 * Classifies every item and evaluates each requested check. Work is spread
 * over `jobs` threads, each graph getting its own solvers; results are
 * gathered by input index so the report does not depend on scheduling.
 */
inline CensusReport run_census(const std::vector<CensusItem>& items, const std::vector<CheckName>& checks,
                               std::string source, const CensusOptions& opt = {}) {
  CensusReport report;
  report.source = std::move(source);
  report.seed = opt.seed;
  report.checks = checks;

  std::map<int, int> per_order_count;
  for (const auto& it : items)
    if (it.graph) ++per_order_count[it.graph->order()];

  struct Slot {
    std::optional<ClassificationRecord> record;
    std::vector<Violation> violations;
  };
  std::vector<Slot> slots(items.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const CensusItem& item = items[i];
      Slot& slot = slots[i];
      if (!item.graph) {
        slot.violations.push_back(
            {"", item.text, "decode", "line " + std::to_string(item.line_number) + ": " + item.error});
        continue;
      }
      const Graph& g = *item.graph;
      slot.record = classify(g);
      const int bucket = per_order_count.at(g.order());
      CheckOptions co;
      co.seed = opt.seed;
      co.continuation_samples = (opt.continuation_samples_per_order + bucket - 1) / bucket;
      for (CheckName c : checks)
        if (auto v = run_check(c, g, *slot.record, co)) slot.violations.push_back(std::move(*v));
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const Slot& s : slots) {
    for (const auto& v : s.violations) report.violations.push_back(v);
    if (!s.record) continue;
    ++report.total;
    OrderTally& t = report.per_order[s.record->n];
    ++t.graphs;
    if (s.record->is_2_critical_s()) {
      ++t.critical_2;
      report.critical_list.push_back(*s.record);
    }
  }
  return report;
}

}  // namespace mbdom
