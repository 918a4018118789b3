#include <mbdom/bruteforce.hpp>
#include <mbdom/verifier.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mbdom;

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

// Thrown for bad user input; main turns it into exit code 2.
struct UsageError : Error {
  using Error::Error;
};

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  int n = -1;
  if (!(in >> n) || n < 0 || n > kMaxVertices) throw UsageError(path + ": first line must be the vertex count");
  std::vector<Edge> edges;
  int u = 0;
  int v = 0;
  while (in >> u >> v) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw UsageError(path + ": bad edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back(Edge::make(u, v));
  }
  if (!in.eof()) throw UsageError(path + ": expected 'u v' pairs after the vertex count");
  return Graph::from_edges(n, edges);
}

Graph load_graph(const std::string& g6, const std::string& edges_file) {
  if (!edges_file.empty()) return read_edge_list(edges_file);
  try {
    return graph6_decode(g6);
  } catch (const ParseError& e) {
    throw UsageError(std::string("graph6: ") + e.what());
  }
}

VertexSet parse_vertex_list(const std::string& text, const Graph& g) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v >= g.order()) throw UsageError("bad vertex '" + item + "'");
    out.insert(v);
  }
  return out;
}

Player parse_game(const std::string& game) { return game == "d" ? Player::Dominator : Player::Staller; }

const char* invariant_name(Player first) { return first == Player::Dominator ? "gamma_MB" : "gamma'_MB"; }

int cmd_solve(const std::string& game, const std::string& predominated, const std::string& g6,
              const std::string& edges) {
  const Graph g = load_graph(g6, edges);
  const VertexSet x = parse_vertex_list(predominated, g);
  const Player first = parse_game(game);
  Solver solver(g);
  const MoveTranscript line = solver.principal_line(make_position(g, x, first));
  std::cout << invariant_name(first) << " = " << line.outcome.to_string() << "\n";
  std::cout << "transcript: " << (line.moves.empty() ? "(none)" : line.to_string()) << "\n";
  return kOk;
}

int cmd_classify(const std::string& g6) {
  std::cout << to_json(classify(load_graph(g6, ""))).dump(2) << "\n";
  return kOk;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

std::vector<CheckName> checks_or_usage(const std::string& list) {
  try {
    return parse_check_list(list);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void print_census(const CensusReport& r) {
  std::cout << "source: " << r.source << "\n";
  std::cout << "graphs: " << r.total << "\n";
  for (const auto& [n, t] : r.per_order)
    std::cout << "n=" << n << ": " << t.graphs << " graphs, " << t.critical_2 << " 2-critical (S-game)\n";
  for (const auto& c : r.critical_list)
    std::cout << "critical " << c.canonical_id << " n=" << c.n << " cut_vertex=" << (c.has_cut_vertex ? "yes" : "no")
              << " families=" << c.family.to_string() << "\n";
  std::cout << r.violations_table();
}

int cmd_census(int builtin, const std::string& file, const std::string& checks, int jobs, const std::string& out_dir,
               bool slow, std::uint64_t seed) {
  const std::vector<CheckName> names = checks_or_usage(checks);
  std::vector<CensusItem> items;
  std::string source;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    items = census_items(read_graph6_stream(in));
    source = "file:" + std::filesystem::path(file).filename().string();
  } else {
    if (builtin < 1 || builtin > kMaxBuiltinOrder)
      throw UsageError("--builtin supports 1.." + std::to_string(kMaxBuiltinOrder));
    if (builtin == kMaxBuiltinOrder && !slow) throw UsageError("--builtin 7 is the slow census; pass --slow");
    items = census_items(enumerate_connected(builtin));
    source = "builtin:" + std::to_string(builtin);
  }
  CensusOptions opt;
  opt.jobs = jobs;
  opt.seed = seed;
  const CensusReport report = run_census(items, names, source, opt);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(std::filesystem::path(out_dir) / "report.json", report.to_json().dump(2) + "\n");
    write_file(std::filesystem::path(out_dir) / "criticals.jsonl", report.criticals_jsonl());
    write_file(std::filesystem::path(out_dir) / "violations.txt", report.violations_table());
  }
  print_census(report);
  return report.passed() ? kOk : kViolations;
}

int cmd_family_gen(const std::string& text) {
  Construction c;
  try {
    c = build(FamilySpec::parse(text));
  } catch (const FamilyError& e) {
    throw UsageError(e.what());
  }
  std::cout << graph6_encode(c.graph) << "\n";
  for (const auto& [name, vs] : c.roles) {
    std::cout << name << ":";
    for (int v : vs) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_family_check(const std::string& g6) {
  const Graph g = load_graph(g6, "");
  const FamilyMembership m = family_membership(g);
  auto line = [](const char* name, bool flag) { std::cout << name << ": " << (flag ? "yes" : "no") << "\n"; };
  line("B", m.B);
  line("F", m.F);
  line("F'", m.Fprime);
  line("C5", m.C5);
  line("H_m", m.H);
  return kOk;
}

int cmd_verify(const std::string& name, int nmax, std::uint64_t seed, int jobs) {
  const auto check = parse_check_name(name);
  if (!check) throw UsageError("unknown check '" + name + "'");
  if (nmax < 1 || nmax > kMaxBuiltinOrder) throw UsageError("--nmax supports 1.." + std::to_string(kMaxBuiltinOrder));
  // Leaf-freeness is a statement about every 2-critical graph, connected or not.
  const bool all_graphs = *check == CheckName::lemma_NoLeaves;
  std::size_t violations = 0;
  for (int n = 1; n <= nmax; ++n) {
    CensusOptions opt;
    opt.jobs = jobs;
    opt.seed = seed;
    const auto graphs = enumerate_graphs(n, !all_graphs);
    const CensusReport r = run_census(census_items(graphs), {*check}, "builtin:" + std::to_string(n), opt);
    std::cout << name << " n=" << n << ": " << r.total << " graphs, " << r.violations.size() << " violations\n";
    if (!r.passed()) std::cout << r.violations_table();
    violations += r.violations.size();
  }
  std::cout << (violations == 0 ? "PASS" : "FAIL") << "\n";
  return violations == 0 ? kOk : kViolations;
}

int cmd_oracle_diff(int nmax, int samples, std::uint64_t seed) {
  if (nmax < 1 || nmax > kMaxBuiltinOrder)
    throw UsageError("--nmax " + std::to_string(nmax) + " is unsupported; oracle-diff supports 1.." +
                     std::to_string(kMaxBuiltinOrder));
  if (samples < 0) throw UsageError("--samples must be non-negative");
  std::mt19937_64 rng(seed);
  int compared = 0;
  int mismatches = 0;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Graph> graphs = enumerate_connected(n);
    if (n > 5) {
      std::vector<Graph> picked;
      std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
      for (int i = 0; i < samples; ++i) picked.push_back(graphs[pick(rng)]);
      graphs = std::move(picked);
    }
    for (const Graph& g : graphs) {
      Solver solver(g);
      for (Player first : {Player::Dominator, Player::Staller}) {
        const GameValue fast = solver.value({}, first);
        const GameValue slow = game_value_bruteforce(g, {}, first);
        ++compared;
        if (fast != slow) {
          ++mismatches;
          std::cout << "mismatch " << graph6_encode(g) << " " << invariant_name(first) << ": solver "
                    << fast.to_string() << ", oracle " << slow.to_string() << "\n";
        }
      }
    }
  }
  std::cout << compared << " comparisons, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kViolations;
}

int cmd_play(const std::string& g6, const std::string& side, const std::string& game, const std::string& save_path) {
  const Graph g = load_graph(g6, "");
  const Player human = side == "dominator" ? Player::Dominator : Player::Staller;
  const Player first = parse_game(game);
  Solver solver(g);
  Position p = make_position(g, {}, first);
  MoveTranscript t;
  std::cout << "graph " << graph6_encode(g) << " on vertices 0.." << g.order() - 1 << ", "
            << invariant_name(first) << " = " << solver.value(p).to_string() << "\n";
  while (terminal_status(p) == Status::Ongoing) {
    int v = -1;
    if (p.turn == human) {
      std::cout << to_string(human) << ", your move: " << std::flush;
      std::string word;
      if (!(std::cin >> word)) {
        std::cout << "\ninput ended\n";
        return kUsage;
      }
      try {
        std::size_t used = 0;
        v = std::stoi(word, &used);
        if (used != word.size()) v = -1;
      } catch (const std::exception&) {
        v = -1;
      }
      if (!p.available.contains(v)) {
        std::cout << "illegal move '" << word << "', choose one of " << p.available.to_string() << "\n";
        continue;
      }
    } else {
      v = solver.optimal_moves(p).first();
      std::cout << to_string(p.turn) << " plays " << v << "\n";
    }
    t.moves.push_back({p.turn, v});
    p = p.play(v);
  }
  const int dominator_moves = static_cast<int>(
      std::count_if(t.moves.begin(), t.moves.end(), [](const Move& m) { return m.player == Player::Dominator; }));
  const bool dominator_won = terminal_status(p) == Status::DominatorWon;
  t.outcome = dominator_won ? GameValue::finite(dominator_moves) : GameValue::infinity();
  if (dominator_won)
    std::cout << "Dominator wins with " << dominator_moves << " moves\n";
  else
    std::cout << "Staller wins (Dominator made " << dominator_moves << " moves)\n";
  std::cout << "transcript: " << t.to_string() << "\n";
  if (!save_path.empty()) write_file(save_path, t.to_string() + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maker-Breaker domination game solver and census tool"};
  app.require_subcommand(1);

  std::string g6;
  std::string edges;
  std::string game = "s";
  std::string predominated;

  auto* solve = app.add_subcommand("solve", "Compute gamma_MB or gamma'_MB and an optimal line");
  solve->add_option("--game", game, "d: Dominator starts, s: Staller starts")->check(CLI::IsMember({"d", "s"}));
  solve->add_option("--predominated", predominated, "Comma-separated vertices treated as already dominated");
  auto* solve_g6 = solve->add_option("--g6", g6, "Graph as a graph6 line");
  auto* solve_edges = solve->add_option("--edges", edges, "Edge-list file: n, then 'u v' per line");
  solve_g6->excludes(solve_edges);
  solve->require_option(1, 3);

  auto* classify_cmd = app.add_subcommand("classify", "Print the classification record of one graph");
  classify_cmd->add_option("--g6", g6, "Graph as a graph6 line")->required();

  int builtin = 0;
  std::string file;
  std::string checks = "all";
  int jobs = 1;
  std::string out_dir;
  bool slow = false;
  std::uint64_t seed = 1;
  auto* census = app.add_subcommand("census", "Classify a corpus and run theorem checks");
  auto* census_builtin = census->add_option("--builtin", builtin, "All connected graphs of this order (1..7)");
  auto* census_file = census->add_option("--file", file, "graph6 corpus, one graph per line");
  census_builtin->excludes(census_file);
  census->add_option("--checks", checks, "Comma-separated check names, or all");
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  census->add_option("--out", out_dir, "Directory for report.json, criticals.jsonl and violations.txt");
  census->add_flag("--slow", slow, "Allow the n=7 built-in census");
  census->add_option("--seed", seed, "Seed for sampled checks");

  std::string spec;
  auto* family = app.add_subcommand("family", "Build or recognize the critical families");
  family->require_subcommand(1);
  auto* family_gen = family->add_subcommand("gen", "Print graph6 and roles for H:m, B:m,n, F:m1,t,m2, Fprime:s,q,m, C5");
  family_gen->add_option("spec", spec, "Family spec")->required();
  auto* family_check = family->add_subcommand("check", "Print family membership flags");
  family_check->add_option("--g6", g6, "Graph as a graph6 line")->required();

  std::string check_name;
  int nmax = 6;
  auto* verify = app.add_subcommand("verify", "Run one check over all graphs up to an order");
  verify->add_option("--check", check_name, "Check name")->required();
  verify->add_option("--nmax", nmax, "Largest order");
  verify->add_option("--seed", seed, "Seed for sampled checks");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  int samples = 200;
  auto* oracle = app.add_subcommand("oracle-diff", "Compare the solver with the brute-force oracle");
  oracle->add_option("--nmax", nmax, "Largest order")->required();
  oracle->add_option("--samples", samples, "Sampled graphs per order above 5");
  oracle->add_option("--seed", seed, "Sampling seed");

  std::string side;
  std::string save_path;
  auto* play = app.add_subcommand("play", "Play against the optimal engine on stdin");
  play->add_option("--g6", g6, "Graph as a graph6 line")->required();
  play->add_option("--as", side, "Your side")->required()->check(CLI::IsMember({"dominator", "staller"}));
  play->add_option("--game", game, "d: Dominator starts, s: Staller starts")->check(CLI::IsMember({"d", "s"}));
  play->add_option("--save", save_path, "Write the transcript to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) {
      if (g6.empty() && edges.empty()) throw UsageError("solve needs --g6 or --edges");
      return cmd_solve(game, predominated, g6, edges);
    }
    if (*classify_cmd) return cmd_classify(g6);
    if (*census) {
      if (census_builtin->count() == 0 && census_file->count() == 0)
        throw UsageError("census needs --builtin or --file");
      return cmd_census(builtin, file, checks, jobs, out_dir, slow, seed);
    }
    if (*family_gen) return cmd_family_gen(spec);
    if (*family_check) return cmd_family_check(g6);
    if (*verify) return cmd_verify(check_name, nmax, seed, jobs);
    if (*oracle) return cmd_oracle_diff(nmax, samples, seed);
    if (*play) return cmd_play(g6, side, game, save_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
