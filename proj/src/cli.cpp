#include "enclave/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "enclave/errors.hpp"
#include "enclave/families.hpp"
#include "enclave/game.hpp"
#include "enclave/invariants.hpp"
#include "enclave/io.hpp"
#include "enclave/strategies.hpp"
#include "enclave/verifier.hpp"
#include "json.hpp"

namespace enclave::cli {

namespace {

struct Config {
  // input: exactly one of these
  std::string input;
  std::string g6;
  std::string family;
  std::string format = "g6";

  std::string kind = "enclaveless";
  std::string starter;
  int cap_n = 0;
  std::vector<std::string> checks;
  std::string out = "table";
  std::uint64_t seed = 1;

  bool no_memo = false;
  bool alpha_beta = false;

  int exhaustive = 0;
  bool connected = false;
  int random_count = 0;
  int random_min = 6;
  int random_max = 10;
  int threads = 0;
  bool domination_game = false;
  bool all_records = false;

  bool heavy = false;

  std::string human;
  std::string strategy;
  std::string side;

  std::string family_name;
  std::vector<int> params;
};

std::string normalize(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

GameKind parse_kind(const std::string& text) {
  return text == "domination" ? GameKind::domination : GameKind::enclaveless;
}

Role parse_role(const std::string& text) {
  if (text == "max" || text == "maximizer" || text == "staller") return Role::maximizer;
  return Role::minimizer;
}

Role starter_of(const Config& c) {
  if (c.starter.empty()) return parse_kind(c.kind) == GameKind::domination ? kDominator : Role::maximizer;
  return parse_role(c.starter);
}

std::string vertex_name(const Graph& g, int v) {
  std::string s = std::to_string(v);
  if (g.has_labels()) s += "[" + g.label(v) + "]";
  return s;
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

Graph make_family(const std::string& raw_name, const std::vector<int>& p) {
  const std::string name = normalize(raw_name);
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      throw std::invalid_argument("family '" + name + "' takes " + std::to_string(count) +
                                  " parameter(s), got " + std::to_string(p.size()));
    }
  };
  static const std::vector<std::string> known = {"path",        "cycle",       "star",
                                                 "complete",    "double-star", "corona-path",
                                                 "connector-ring"};
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    throw std::invalid_argument("unknown family '" + raw_name + "'");
  }
  need(name == "connector-ring" ? 2 : 1);
  if (name == "path") return path(p[0]);
  if (name == "cycle") return cycle(p[0]);
  if (name == "star") return star(p[0]);
  if (name == "complete") return complete(p[0]);
  if (name == "double-star") return double_star(p[0]);
  if (name == "corona-path") return corona_path(p[0]);
  return connector_ring(p[0], p[1]);
}

// "connector-ring 2 4" or "connector-ring:2,4"
Graph family_from_text(const std::string& text) {
  std::string flat = text;
  std::replace(flat.begin(), flat.end(), ':', ' ');
  std::replace(flat.begin(), flat.end(), ',', ' ');
  std::istringstream words(flat);
  std::string name;
  words >> name;
  std::vector<int> params;
  std::string token;
  while (words >> token) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad family parameter '" + token + "'");
    }
  }
  return make_family(name, params);
}

std::vector<Graph> load_graphs(const Config& c, std::istream& in) {
  const int sources = !c.input.empty() + !c.g6.empty() + !c.family.empty();
  if (sources != 1) throw CLI::ValidationError("input", "give exactly one of --input, --g6, --family");
  std::vector<Graph> graphs;
  if (!c.g6.empty()) {
    graphs.push_back(parse_graph6(c.g6));
  } else if (!c.family.empty()) {
    graphs.push_back(family_from_text(c.family));
  } else if (c.format == "edges") {
    graphs.push_back(parse_edge_list(read_source(c.input, in)));
  } else if (c.format == "family") {
    graphs.push_back(build_family_f(parse_family_spec(read_source(c.input, in))).graph);
  } else {
    std::istringstream text(read_source(c.input, in));
    graphs = read_graph6_stream(text);
  }
  if (graphs.empty()) throw parse_error("input holds no graph");
  if (c.cap_n > 0) {
    for (const Graph& g : graphs) {
      if (g.order() > c.cap_n) {
        throw cap_exceeded("order " + std::to_string(g.order()) + " exceeds --cap-n " +
                           std::to_string(c.cap_n));
      }
    }
  }
  return graphs;
}

Graph load_single(const Config& c, std::istream& in) {
  std::vector<Graph> graphs = load_graphs(c, in);
  if (graphs.size() != 1) throw CLI::ValidationError("input", "expected a single graph");
  return graphs.front();
}

SolverOptions solver_options(const Config& c) {
  SolverOptions o;
  o.memoize = !c.no_memo;
  o.alpha_beta = c.alpha_beta;
  o.cap = c.cap_n;
  return o;
}

BruteForceCaps brute_caps(const Config& c) {
  BruteForceCaps caps;
  if (c.cap_n > 0) caps = BruteForceCaps{c.cap_n, c.cap_n};
  return caps;
}

int cmd_invariants(const Config& c, std::istream& in, std::ostream& out) {
  for (const Graph& g : load_graphs(c, in)) {
    const InvariantReport r = compute_invariants(g, brute_caps(c));
    if (c.out == "records") {
      nlohmann::ordered_json j{{"graph6", write_graph6(g)}, {"n", r.n},          {"gamma", r.gamma},
                               {"Gamma", r.Gamma},          {"psi", r.psi},      {"Psi", r.Psi},
                               {"alpha", r.alpha},          {"IR", r.IR},
                               {"well_dominated", r.well_dominated}};
      out << j.dump() << '\n';
      continue;
    }
    out << "graph6          " << write_graph6(g) << '\n'
        << "n               " << r.n << '\n'
        << "gamma           " << r.gamma << '\n'
        << "Gamma           " << r.Gamma << '\n'
        << "psi             " << r.psi << '\n'
        << "Psi             " << r.Psi << '\n'
        << "alpha           " << r.alpha << '\n'
        << "IR              " << r.IR << '\n'
        << "well-dominated  " << (r.well_dominated ? "yes" : "no") << '\n';
    if (r.degenerate) out << "note            K1: the empty set is the only maximal enclaveless set\n";
    out << '\n';
  }
  return kOk;
}

int cmd_game(const Config& c, std::istream& in, std::ostream& out) {
  const GameKind kind = parse_kind(c.kind);
  const Role starter = starter_of(c);
  for (const Graph& g : load_graphs(c, in)) {
    const GameOutcome outcome = solve(g, kind, starter, solver_options(c));
    if (c.out == "records") {
      nlohmann::ordered_json j{{"graph6", write_graph6(g)},
                               {"kind", kind_name(kind)},
                               {"starter", role_name(kind, starter)},
                               {"value", outcome.total_moves},
                               {"optimal_first_moves", outcome.optimal_first_moves.to_vector()},
                               {"transcript", outcome.principal_variation}};
      out << j.dump() << '\n';
      continue;
    }
    out << "graph6   " << write_graph6(g) << " (n=" << g.order() << ")\n"
        << "game     " << kind_name(kind) << ", " << role_name(kind, starter) << " starts\n"
        << "value    " << outcome.total_moves << '\n'
        << "optimal first moves " << to_string(outcome.optimal_first_moves) << '\n'
        << "transcript\n";
    Position p = Position::initial(g, kind, starter);
    for (std::size_t i = 0; i < outcome.principal_variation.size(); ++i) {
      const int v = outcome.principal_variation[i];
      out << "  " << i + 1 << ". " << role_name(kind, p.mover()) << ' ' << vertex_name(g, v) << '\n';
      p = apply_move(p, v);
    }
    out << '\n';
  }
  return kOk;
}

void print_graph(const Graph& g, const Config& c, std::ostream& out) {
  if (c.format == "edges") {
    out << write_edge_list(g);
  } else {
    out << write_graph6(g) << '\n';
  }
}

int cmd_family(const Config& c, std::istream& in, std::ostream& out) {
  const std::string name = normalize(c.family_name);
  if (name == "family-f") {
    if (c.input.empty()) throw CLI::ValidationError("family-f", "needs --input <spec file>");
    const PartitionedGraph pg = build_family_f(parse_family_spec(read_source(c.input, in)));
    print_graph(pg.graph, c, out);
    return kOk;
  }
  if (name == "labeled-trees") {
    if (c.params.size() != 1) throw std::invalid_argument("labeled-trees takes 1 parameter");
    for (const Graph& t : labeled_trees(c.params[0])) print_graph(t, c, out);
    return kOk;
  }
  if (name == "family-f-members") {
    if (c.params.size() != 2) throw std::invalid_argument("family-f-members takes 2 parameters");
    for (const PartitionedGraph& pg : family_f_members(c.params[0], c.params[1])) {
      print_graph(pg.graph, c, out);
    }
    return kOk;
  }
  print_graph(make_family(c.family_name, c.params), c, out);
  return kOk;
}

std::vector<std::string> split_checks(const std::vector<std::string>& raw) {
  std::vector<std::string> names;
  for (const std::string& item : raw) {
    std::istringstream parts(item);
    std::string name;
    while (std::getline(parts, name, ',')) {
      if (!name.empty()) names.push_back(name);
    }
  }
  return names;
}

std::vector<Graph> random_graphs(const Config& c) {
  if (c.random_min < 1 || c.random_max < c.random_min || c.random_max > kMaxOrder) {
    throw CLI::ValidationError("random", "bad order range");
  }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> order(c.random_min, c.random_max);
  std::bernoulli_distribution coin(0.5);
  std::vector<Graph> graphs;
  for (int i = 0; i < c.random_count; ++i) {
    const int n = order(rng);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    graphs.emplace_back(n, edges);
  }
  return graphs;
}

int cmd_sweep(const Config& c, std::istream& in, std::ostream& out) {
  CheckCatalog catalog = default_catalog();
  if (!c.checks.empty()) {
    const std::vector<std::string> names = split_checks(c.checks);
    catalog = select_checks(catalog, names);
  }
  SweepOptions options;
  options.threads = c.threads;
  options.caps = brute_caps(c);
  options.solver = solver_options(c);
  options.domination_game = c.domination_game;
  options.keep_all_records = c.all_records;

  const int sources = (c.exhaustive > 0) + (c.random_count > 0) + !c.input.empty() + !c.g6.empty() +
                      !c.family.empty();
  if (sources != 1) {
    throw CLI::ValidationError("input", "give exactly one of --exhaustive, --random, --input, --g6, --family");
  }
  std::unique_ptr<Corpus> corpus;
  if (c.exhaustive > 0) {
    corpus = std::make_unique<LabeledCorpus>(exhaustive_corpus(c.exhaustive, c.connected));
  } else if (c.random_count > 0) {
    corpus = std::make_unique<ListCorpus>(random_graphs(c));
  } else {
    corpus = std::make_unique<ListCorpus>(load_graphs(c, in));
  }
  const SweepResult result = run_checks(*corpus, catalog, options);
  emit_report(out, result.records, result.summary,
              c.out == "records" ? ReportFormat::records : ReportFormat::table);
  return result.summary.violations > 0 ? kViolation : kOk;
}

int cmd_reproduce(const Config& c, std::ostream& out) {
  const std::vector<ReferenceRow> rows = reference_table(ReferenceOptions{c.heavy, 13});
  out << format_reference_table(rows);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const ReferenceRow& r) { return r.passed(); });
  return all ? kOk : kViolation;
}

int cmd_simulate(const Config& c, std::istream& in, std::ostream& out) {
  const Graph g = load_single(c, in);
  const GameKind kind = parse_kind(c.kind);
  const Role starter = starter_of(c);
  const std::unique_ptr<Strategy> strategy = make_strategy(c.strategy, g);
  Role side = Role::maximizer;
  if (!c.side.empty()) {
    side = parse_role(c.side);
  } else if (c.strategy == "greedy") {
    throw CLI::ValidationError("side", "--side is required for the greedy strategy");
  }
  const SimulationResult sim = simulate(g, kind, starter, side, *strategy, solver_options(c));
  const int exact = solve(g, kind, starter, solver_options(c)).total_moves;
  out << "graph6     " << write_graph6(g) << " (n=" << g.order() << ")\n"
      << "game       " << kind_name(kind) << ", " << role_name(kind, starter) << " starts\n"
      << "strategy   " << strategy->name() << " for " << role_name(kind, side) << '\n'
      << "value      " << sim.total_moves << " (exact game value " << exact << ")\n"
      << "fallbacks  " << sim.fallback_count << " in the explored tree, " << sim.fallbacks_on_line
      << " on the printed line\n"
      << "line      ";
  for (int v : sim.line) out << ' ' << vertex_name(g, v);
  out << '\n';
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < sim.fallback_log.size() && i < kShown; ++i) {
    out << "  fallback: " << sim.fallback_log[i] << '\n';
  }
  if (sim.fallback_count > static_cast<int>(kShown)) {
    out << "  ... " << sim.fallback_count - static_cast<int>(kShown) << " more fallbacks\n";
  }
  return kOk;
}

std::optional<int> resolve_vertex(const Graph& g, const std::string& text) {
  int v = -1;
  std::istringstream in(text);
  std::string rest;
  if (in >> v && !(in >> rest)) return v >= 0 && v < g.order() ? std::optional<int>(v) : std::nullopt;
  if (g.has_labels()) return g.find_label(text);
  return std::nullopt;
}

std::string list_moves(const Graph& g, VertexSet moves) {
  std::string s;
  for (int v : moves) s += (s.empty() ? "" : " ") + vertex_name(g, v);
  return s;
}

int cmd_play(const Config& c, std::istream& in, std::ostream& out) {
  if (c.input == "-") throw CLI::ValidationError("input", "play reads moves from stdin; give the graph another way");
  const Graph g = load_single(c, in);
  const GameKind kind = parse_kind(c.kind);
  const Role starter = starter_of(c);
  if (c.human.empty()) throw CLI::ValidationError("human", "--human is required");
  const Role human = parse_role(c.human);
  Solver solver(g, kind, solver_options(c));

  out << kind_name(kind) << " game on " << write_graph6(g) << " (n=" << g.order() << "), "
      << role_name(kind, starter) << " starts; you are " << role_name(kind, human) << '\n';
  Position p = Position::initial(g, kind, starter);
  while (!is_terminal(p)) {
    const VertexSet moves = legal_moves(p);
    out << "played: " << to_string(p.played()) << '\n' << "legal: " << list_moves(g, moves) << '\n';
    int v = -1;
    if (p.mover() == human) {
      for (;;) {
        out << "your move> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
          out << "\ninput ended, game abandoned\n";
          return kUsage;
        }
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (line == "quit") {
          out << "game abandoned\n";
          return kOk;
        }
        const std::optional<int> choice = resolve_vertex(g, line);
        if (choice && moves.contains(*choice)) {
          v = *choice;
          out << "you play " << vertex_name(g, v) << '\n';
          break;
        }
        out << "'" << line << "' is not a legal move\n";
      }
    } else {
      v = solver.solve(p).principal_variation.front();
      out << "engine (" << role_name(kind, p.mover()) << ") plays " << vertex_name(g, v) << '\n';
    }
    p = apply_move(p, v);
  }

  const VertexSet played = p.played();
  out << "game over: " << played.size() << " vertices played " << to_string(played) << '\n';
  const int value = solver.solve(starter).total_moves;
  if (kind == GameKind::enclaveless) {
    if (!is_maximal_enclaveless(g, played)) {
      throw std::logic_error("finished set " + to_string(played) + " is not maximal enclaveless");
    }
    out << "final set is maximal enclaveless";
    try {
      const BruteForceCaps caps = brute_caps(c);
      out << "; psi=" << lower_enclaveless_number(g, caps) << " <= " << played.size()
          << " <= Psi=" << enclaveless_number(g, caps);
    } catch (const cap_exceeded&) {
    }
  } else {
    if (!is_dominating(g, played)) {
      throw std::logic_error("finished set " + to_string(played) + " does not dominate");
    }
    out << "final set is dominating";
    try {
      out << "; gamma=" << domination_number(g, brute_caps(c)) << " <= " << played.size();
    } catch (const cap_exceeded&) {
    }
  }
  out << "; optimal play gives " << value << '\n';
  return kOk;
}

void add_input(CLI::App* cmd, Config& c) {
  cmd->add_option("--input", c.input, "graph file, or - for stdin")->envname("ENCLAVE_INPUT");
  cmd->add_option("--g6", c.g6, "graph6 text given inline");
  cmd->add_option("--family", c.family, "built-in family, e.g. \"connector-ring 2 4\"");
  cmd->add_option("--format", c.format, "input format")
      ->check(CLI::IsMember({"g6", "edges", "family"}))
      ->envname("ENCLAVE_FORMAT");
  cmd->add_option("--cap-n", c.cap_n, "refuse graphs above this order")
      ->check(CLI::Range(1, kMaxOrder))
      ->envname("ENCLAVE_CAP_N");
}

void add_out(CLI::App* cmd, Config& c) {
  cmd->add_option("--out", c.out, "output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->envname("ENCLAVE_OUT");
}

void add_game(CLI::App* cmd, Config& c) {
  cmd->add_option("--kind", c.kind, "game kind")
      ->check(CLI::IsMember({"enclaveless", "domination"}))
      ->envname("ENCLAVE_KIND");
  cmd->add_option("--starter", c.starter, "who moves first")
      ->check(CLI::IsMember({"max", "min", "dominator", "staller"}))
      ->envname("ENCLAVE_STARTER");
  cmd->add_flag("--no-memo", c.no_memo, "plain minimax without a table");
  cmd->add_flag("--alpha-beta", c.alpha_beta, "alpha-beta search");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app("Enclaveless and domination games on small graphs", "enclave");
  app.require_subcommand(1);

  auto* invariants = app.add_subcommand("invariants", "gamma, Gamma, psi, Psi, alpha, IR of each input graph");
  add_input(invariants, c);
  add_out(invariants, c);

  auto* game = app.add_subcommand("game", "solve the game exactly and print an optimal line");
  add_input(game, c);
  add_game(game, c);
  add_out(game, c);

  auto* family = app.add_subcommand("family", "print a generated graph");
  family->add_option("name", c.family_name,
                     "path, cycle, star, complete, double-star, corona-path, connector-ring, "
                     "family-f, labeled-trees, family-f-members")
      ->required();
  family->add_option("params", c.params, "integer parameters");
  family->add_option("--input", c.input, "family spec file for family-f")->envname("ENCLAVE_INPUT");
  family->add_option("--format", c.format, "output format")->check(CLI::IsMember({"g6", "edges"}));

  auto* sweep = app.add_subcommand("sweep", "run the check catalog over a corpus");
  add_input(sweep, c);
  add_out(sweep, c);
  sweep->add_option("--exhaustive", c.exhaustive, "all labeled graphs on 2..N vertices")
      ->check(CLI::Range(2, 64));
  sweep->add_flag("--connected", c.connected, "connected members only");
  sweep->add_option("--random", c.random_count, "number of random graphs")->check(CLI::Range(1, 100000000));
  sweep->add_option("--random-min", c.random_min, "smallest random order");
  sweep->add_option("--random-max", c.random_max, "largest random order");
  sweep->add_option("--seed", c.seed, "seed for --random")->envname("ENCLAVE_SEED");
  sweep->add_option("--checks", c.checks, "comma separated check names")
      ->delimiter(',')
      ->envname("ENCLAVE_CHECKS");
  sweep->add_option("--threads", c.threads, "worker threads (0 = all cores)")->check(CLI::Range(0, 256));
  sweep->add_flag("--domination-game", c.domination_game, "also solve both domination games");
  sweep->add_flag("--all-records", c.all_records, "list passing graphs too");
  sweep->add_flag("--no-memo", c.no_memo, "plain minimax without a table");
  sweep->add_flag("--alpha-beta", c.alpha_beta, "alpha-beta search");

  auto* checks = app.add_subcommand("checks", "list the check catalog");

  auto* reproduce = app.add_subcommand("reproduce", "recompute the reference values");
  reproduce->add_flag("--heavy", c.heavy, "include the 20-vertex corona rows");

  auto* play = app.add_subcommand("play", "play against the engine on stdin/stdout");
  add_input(play, c);
  add_game(play, c);
  play->add_option("--human", c.human, "your side")
      ->check(CLI::IsMember({"max", "min", "dominator", "staller"}));

  auto* sim = app.add_subcommand("simulate", "scripted strategy against an exact opponent");
  add_input(sim, c);
  add_game(sim, c);
  sim->add_option("--strategy", c.strategy, "scripted strategy")
      ->check(CLI::IsMember(builtin_strategies()))
      ->required();
  sim->add_option("--side", c.side, "side following the script")
      ->check(CLI::IsMember({"max", "min", "dominator", "staller"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* active = &app;
    for (CLI::App* sub : app.get_subcommands()) active = sub;
    err << active->help();
    return kUsage;
  }
  if (c.seed == 0) c.seed = 1;

  try {
    if (invariants->parsed()) return cmd_invariants(c, in, out);
    if (game->parsed()) return cmd_game(c, in, out);
    if (family->parsed()) return cmd_family(c, in, out);
    if (sweep->parsed()) return cmd_sweep(c, in, out);
    if (checks->parsed()) {
      for (const Check& check : default_catalog()) {
        out << std::left << std::setw(30) << check.name << check.statement << '\n';
      }
      return kOk;
    }
    if (reproduce->parsed()) return cmd_reproduce(c, out);
    if (play->parsed()) return cmd_play(c, in, out);
    if (sim->parsed()) return cmd_simulate(c, in, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cap_exceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace enclave::cli
