#include "enclave/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "enclave/errors.hpp"
#include "enclave/families.hpp"
#include "enclave/strategies.hpp"

namespace enclave {

namespace {

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

}  // namespace

LabeledCorpus::LabeledCorpus(int n_max, bool connected_only)
    : n_max_(n_max), connected_only_(connected_only) {
  if (n_max < 2) throw std::invalid_argument("exhaustive corpus needs n_max >= 2");
  if (n_max > kExhaustiveCap) {
    throw cap_exceeded("exhaustive corpus supports n_max <= " + std::to_string(kExhaustiveCap) +
                       ", got " + std::to_string(n_max));
  }
  for (int n = 2; n <= n_max; ++n) {
    offsets_.push_back(size_);
    size_ += std::size_t{1} << pair_count(n);
  }
}

std::optional<Graph> LabeledCorpus::at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("corpus index " + std::to_string(i));
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i) - 1;
  const int n = static_cast<int>(it - offsets_.begin()) + 2;
  const std::uint64_t mask = i - *it;

  std::vector<Edge> edges;
  std::uint64_t adj[kExhaustiveCap] = {};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int u = 0; u < j; ++u, ++bit) {
      if ((mask >> bit) & 1U) {
        edges.emplace_back(u, j);
        adj[u] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << u;
      }
    }
  }
  if (connected_only_) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (int v = 0; v < n; ++v) {
        if ((frontier >> v) & 1U) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (std::uint64_t{1} << n) - 1) return std::nullopt;
  }
  return Graph(n, edges);
}

LabeledCorpus exhaustive_corpus(int n_max, bool connected_only) {
  return LabeledCorpus(n_max, connected_only);
}

std::size_t member_count(const Corpus& corpus) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus.at(i)) ++count;
  }
  return count;
}

CheckContext::CheckContext(const Graph& g, const InvariantReport& report, const GameValues& values)
    : graph_(&g),
      report_(&report),
      values_(&values),
      degrees_(degree_profile(g)),
      connected_(is_connected(g)) {}

bool CheckContext::star_free(int s) const {
  const auto slot = static_cast<std::size_t>(s);
  if (star_free_.size() <= slot) star_free_.resize(slot + 1);
  if (!star_free_[slot]) star_free_[slot] = !has_induced_star(*graph_, s);
  return *star_free_[slot];
}

bool CheckContext::is_p3() const { return graph_->order() == 3 && graph_->edge_count() == 2; }

namespace {

using Verdict = std::optional<std::string>;

std::string both_values(const CheckContext& c) {
  return "psg_plus=" + std::to_string(c.values().psg_plus) +
         " psg_minus=" + std::to_string(c.values().psg_minus) + " n=" + std::to_string(c.n());
}

// 2 * value >= n for both starters.
Verdict both_at_least_half(const CheckContext& c) {
  if (2 * c.values().psg_plus >= c.n() && 2 * c.values().psg_minus >= c.n()) return std::nullopt;
  return both_values(c);
}

bool always(const CheckContext&) { return true; }

}  // namespace

CheckCatalog default_catalog() {
  CheckCatalog catalog;

  catalog.push_back(Check{
      "complement-identity", "gamma + Psi = n = Gamma + psi", always,
      [](const CheckContext& c) -> Verdict {
        const InvariantReport& r = c.report();
        if (r.gamma + r.Psi == r.n && r.Gamma + r.psi == r.n) return std::nullopt;
        return "gamma=" + std::to_string(r.gamma) + " Psi=" + std::to_string(r.Psi) +
               " Gamma=" + std::to_string(r.Gamma) + " psi=" + std::to_string(r.psi) +
               " n=" + std::to_string(r.n);
      }});

  catalog.push_back(Check{
      "game-sandwich", "psi <= psg_plus, psg_minus <= Psi", always,
      [](const CheckContext& c) -> Verdict {
        const InvariantReport& r = c.report();
        const GameValues& v = c.values();
        if (r.psi <= v.psg_plus && v.psg_plus <= r.Psi && r.psi <= v.psg_minus &&
            v.psg_minus <= r.Psi) {
          return std::nullopt;
        }
        return "psi=" + std::to_string(r.psi) + " Psi=" + std::to_string(r.Psi) + " " +
               both_values(c);
      }});

  catalog.push_back(Check{
      "well-dominated-value", "well-dominated => psg_plus = psg_minus = n - gamma",
      [](const CheckContext& c) { return c.report().well_dominated; },
      [](const CheckContext& c) -> Verdict {
        const int target = c.n() - c.report().gamma;
        if (c.values().psg_plus == target && c.values().psg_minus == target) return std::nullopt;
        return "gamma=" + std::to_string(c.report().gamma) + " " + both_values(c);
      }});

  catalog.push_back(Check{
      "domination-chain", "alpha <= Gamma <= IR", always,
      [](const CheckContext& c) -> Verdict {
        const InvariantReport& r = c.report();
        if (r.alpha <= r.Gamma && r.Gamma <= r.IR) return std::nullopt;
        return "alpha=" + std::to_string(r.alpha) + " Gamma=" + std::to_string(r.Gamma) +
               " IR=" + std::to_string(r.IR);
      }});

  catalog.push_back(Check{
      "enclaveless-degree-bounds", "isolate-free => n/(D+1) <= psi <= Psi <= D n/(D+1)",
      [](const CheckContext& c) { return c.isolate_free(); },
      [](const CheckContext& c) -> Verdict {
        const InvariantReport& r = c.report();
        const int d = c.degrees().max_degree;
        if (r.n <= (d + 1) * r.psi && r.psi <= r.Psi && (d + 1) * r.Psi <= d * r.n) {
          return std::nullopt;
        }
        return "psi=" + std::to_string(r.psi) + " Psi=" + std::to_string(r.Psi) +
               " maxdeg=" + std::to_string(d) + " n=" + std::to_string(r.n);
      }});

  catalog.push_back(Check{
      "packing-at-equality",
      "isolate-free and gamma = n/(D+1) => some minimum dominating set is a 2-packing of degree-D vertices",
      [](const CheckContext& c) {
        return c.isolate_free() && c.report().gamma * (c.degrees().max_degree + 1) == c.n();
      },
      [](const CheckContext& c) -> Verdict {
        const Graph& g = c.graph();
        const int d = c.degrees().max_degree;
        for (VertexSet s : minimum_dominating_sets(g)) {
          bool all_max = true;
          for (int v : s) all_max = all_max && g.degree(v) == d;
          if (all_max && is_2_packing(g, s)) return std::nullopt;
        }
        return "gamma=" + std::to_string(c.report().gamma) + " maxdeg=" + std::to_string(d) +
               " n=" + std::to_string(c.n()) + " but no minimum dominating set qualifies";
      }});

  catalog.push_back(Check{
      "game-degree-bounds", "isolate-free => n/(D+1) <= psg_plus, psg_minus <= D n/(D+1)",
      [](const CheckContext& c) { return c.isolate_free(); },
      [](const CheckContext& c) -> Verdict {
        const int d = c.degrees().max_degree;
        const int n = c.n();
        for (int value : {c.values().psg_plus, c.values().psg_minus}) {
          if (n > (d + 1) * value || (d + 1) * value > d * n) {
            return both_values(c) + " maxdeg=" + std::to_string(d);
          }
        }
        return std::nullopt;
      }});

  catalog.push_back(Check{
      "regular-half", "k-regular with k >= 1 => psg_plus, psg_minus >= n/2",
      [](const CheckContext& c) { return c.degrees().regular && c.degrees().min_degree >= 1; },
      both_at_least_half});

  for (int k : {2, 3}) {
    const std::string star = "K_{1," + std::to_string(k + 1) + "}";
    catalog.push_back(Check{
        "star-free-half-k" + std::to_string(k),
        "min degree >= " + std::to_string(k) + " and no induced " + star +
            " => psg_plus, psg_minus >= n/2",
        [k](const CheckContext& c) { return c.degrees().min_degree >= k && c.star_free(k + 1); },
        both_at_least_half});
  }

  catalog.push_back(Check{
      "claw-free-alpha",
      "connected claw-free: min degree 1 => alpha <= (n+1)/2; min degree d >= 2 => alpha <= 2n/(d+2)",
      [](const CheckContext& c) {
        return c.connected() && c.degrees().min_degree >= 1 && c.claw_free();
      },
      [](const CheckContext& c) -> Verdict {
        const int a = c.report().alpha;
        const int n = c.n();
        const int d = c.degrees().min_degree;
        const bool ok = d == 1 ? 2 * a <= n + 1 : a * (d + 2) <= 2 * n;
        if (ok) return std::nullopt;
        return "alpha=" + std::to_string(a) + " mindeg=" + std::to_string(d) +
               " n=" + std::to_string(n);
      }});

  catalog.push_back(Check{
      "claw-free-ir", "connected claw-free => IR <= (n+1)/2, and equality forces alpha = Gamma = IR",
      [](const CheckContext& c) { return c.connected() && c.claw_free(); },
      [](const CheckContext& c) -> Verdict {
        const InvariantReport& r = c.report();
        const bool bound = 2 * r.IR <= r.n + 1;
        const bool equality_ok = 2 * r.IR != r.n + 1 || (r.alpha == r.IR && r.Gamma == r.IR);
        if (bound && equality_ok) return std::nullopt;
        return "IR=" + std::to_string(r.IR) + " alpha=" + std::to_string(r.alpha) +
               " Gamma=" + std::to_string(r.Gamma) + " n=" + std::to_string(r.n);
      }});

  catalog.push_back(Check{
      "claw-free-ir-min-degree-2", "connected claw-free with min degree >= 2 => IR <= n/2",
      [](const CheckContext& c) {
        return c.connected() && c.degrees().min_degree >= 2 && c.claw_free();
      },
      [](const CheckContext& c) -> Verdict {
        if (2 * c.report().IR <= c.n()) return std::nullopt;
        return "IR=" + std::to_string(c.report().IR) + " n=" + std::to_string(c.n());
      }});

  catalog.push_back(Check{
      "claw-free-game-min-degree-2",
      "connected claw-free with min degree >= 2 => psg_plus, psg_minus >= n/2",
      [](const CheckContext& c) {
        return c.connected() && c.degrees().min_degree >= 2 && c.claw_free();
      },
      both_at_least_half});

  catalog.push_back(Check{
      "claw-free-max-start-half", "connected claw-free of order >= 2 => psg_plus >= n/2",
      [](const CheckContext& c) { return c.n() >= 2 && c.connected() && c.claw_free(); },
      [](const CheckContext& c) -> Verdict {
        if (2 * c.values().psg_plus >= c.n()) return std::nullopt;
        return both_values(c);
      }});

  catalog.push_back(Check{
      "claw-free-min-start-half", "connected claw-free of order >= 2, not P3 => psg_minus >= n/2",
      [](const CheckContext& c) {
        return c.n() >= 2 && c.connected() && !c.is_p3() && c.claw_free();
      },
      [](const CheckContext& c) -> Verdict {
        if (2 * c.values().psg_minus >= c.n()) return std::nullopt;
        return both_values(c);
      }});

  catalog.push_back(Check{
      "isolate-free-max-start-half", "isolate-free => psg_plus >= n/2 (open conjecture)",
      [](const CheckContext& c) { return c.isolate_free(); },
      [](const CheckContext& c) -> Verdict {
        if (2 * c.values().psg_plus >= c.n()) return std::nullopt;
        return both_values(c);
      }});

  catalog.push_back(Check{
      "min-degree-2-min-start-half", "min degree >= 2 => psg_minus >= n/2 (open conjecture)",
      [](const CheckContext& c) { return c.degrees().min_degree >= 2; },
      [](const CheckContext& c) -> Verdict {
        if (2 * c.values().psg_minus >= c.n()) return std::nullopt;
        return both_values(c);
      }});

  catalog.push_back(Check{
      "domination-game-gap", "|gg - ggp| <= 1",
      [](const CheckContext& c) { return c.values().gg.has_value() && c.values().ggp.has_value(); },
      [](const CheckContext& c) -> Verdict {
        const int gg = *c.values().gg;
        const int ggp = *c.values().ggp;
        if (gg - ggp <= 1 && ggp - gg <= 1) return std::nullopt;
        return "gg=" + std::to_string(gg) + " ggp=" + std::to_string(ggp);
      },
      true});

  return catalog;
}

CheckCatalog select_checks(const CheckCatalog& catalog, std::span<const std::string> names) {
  for (const std::string& name : names) {
    const bool known = std::any_of(catalog.begin(), catalog.end(),
                                   [&](const Check& c) { return c.name == name; });
    if (!known) throw std::invalid_argument("unknown check '" + name + "'");
  }
  CheckCatalog out;
  for (const Check& c : catalog) {
    if (std::find(names.begin(), names.end(), c.name) != names.end()) out.push_back(c);
  }
  return out;
}

namespace {

// Evaluates and tallies per check into `tallies` (parallel to the catalog).
SweepRecord evaluate(const Graph& g, const CheckCatalog& catalog, const SweepOptions& options,
                     std::vector<CheckTally>* tallies) {
  SweepRecord record;
  record.graph6 = write_graph6(g);
  record.report = compute_invariants(g, options.caps);
  {
    Solver solver(g, GameKind::enclaveless, options.solver);
    record.values.psg_plus = solver.solve(Role::maximizer).total_moves;
    record.values.psg_minus = solver.solve(Role::minimizer).total_moves;
  }
  if (options.domination_game) {
    Solver solver(g, GameKind::domination, options.solver);
    record.values.gg = solver.solve(kDominator).total_moves;
    record.values.ggp = solver.solve(kStaller).total_moves;
  }
  const CheckContext context(g, record.report, record.values);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Check& check = catalog[i];
    if (!check.applies(context)) continue;
    Verdict failure = check.violation(context);
    if (tallies != nullptr) {
      ++(*tallies)[i].applied;
      if (failure) ++(*tallies)[i].failed;
    }
    record.checks.push_back(CheckResult{check.name, !failure, failure.value_or("")});
  }
  return record;
}

}  // namespace

SweepRecord evaluate_graph(const Graph& g, const CheckCatalog& catalog, const SweepOptions& options) {
  return evaluate(g, catalog, options, nullptr);
}

bool replays(const SweepRecord& record, const CheckCatalog& catalog, const SweepOptions& options) {
  SweepOptions again = options;
  again.domination_game = record.values.gg.has_value();
  const SweepRecord fresh = evaluate_graph(parse_graph6(record.graph6), catalog, again);
  if (!(fresh.report.gamma == record.report.gamma && fresh.report.Gamma == record.report.Gamma &&
        fresh.report.psi == record.report.psi && fresh.report.Psi == record.report.Psi &&
        fresh.report.alpha == record.report.alpha && fresh.report.IR == record.report.IR &&
        fresh.report.n == record.report.n && fresh.values == record.values)) {
    return false;
  }
  if (fresh.checks.size() != record.checks.size()) return false;
  for (std::size_t i = 0; i < fresh.checks.size(); ++i) {
    if (fresh.checks[i].name != record.checks[i].name ||
        fresh.checks[i].passed != record.checks[i].passed) {
      return false;
    }
  }
  return true;
}

SweepResult run_checks(const Corpus& corpus, const CheckCatalog& catalog, const SweepOptions& options) {
  constexpr std::size_t kChunk = 512;
  constexpr std::size_t kWarningLimit = 20;

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);

  std::atomic<std::size_t> next{0};
  std::mutex sink;
  SweepResult result;
  std::vector<CheckTally> tallies(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) tallies[i].name = catalog[i].name;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::pair<std::size_t, std::string>> warnings;

  auto worker = [&] {
    std::vector<CheckTally> local(catalog.size());
    std::vector<SweepRecord> kept;
    std::vector<std::pair<std::size_t, std::string>> local_warnings;
    std::size_t local_checked = 0;
    std::size_t local_skipped = 0;
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= corpus.size()) break;
      const std::size_t end = std::min(corpus.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        std::optional<Graph> g = corpus.at(i);
        if (!g) continue;
        try {
          SweepRecord record = evaluate(*g, catalog, options, &local);
          record.index = i;
          ++local_checked;
          if (options.keep_all_records || record.violated()) kept.push_back(std::move(record));
        } catch (const cap_exceeded& e) {
          ++local_skipped;
          local_warnings.emplace_back(i, "skipped member " + std::to_string(i) + " (" +
                                             write_graph6(*g) + "): " + e.what());
        }
      }
    }
    std::lock_guard lock(sink);
    for (std::size_t i = 0; i < local.size(); ++i) {
      tallies[i].applied += local[i].applied;
      tallies[i].failed += local[i].failed;
    }
    checked += local_checked;
    skipped += local_skipped;
    for (auto& r : kept) result.records.push_back(std::move(r));
    for (auto& w : local_warnings) warnings.push_back(std::move(w));
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(result.records.begin(), result.records.end(),
            [](const SweepRecord& a, const SweepRecord& b) { return a.index < b.index; });
  std::sort(warnings.begin(), warnings.end());

  SweepSummary& summary = result.summary;
  summary.graphs_checked = checked;
  summary.graphs_skipped = skipped;
  for (const CheckTally& t : tallies) summary.violations += t.failed;
  summary.per_check = std::move(tallies);
  for (std::size_t i = 0; i < warnings.size() && i < kWarningLimit; ++i) {
    summary.warnings.push_back(std::move(warnings[i].second));
  }
  if (warnings.size() > kWarningLimit) {
    summary.warnings.push_back(std::to_string(warnings.size() - kWarningLimit) +
                               " further members skipped");
  }
  return result;
}

namespace {

int enclaveless_value(const Graph& g, Role starter) {
  return solve(g, GameKind::enclaveless, starter).total_moves;
}

int domination_value(const Graph& g, Role starter) {
  return solve(g, GameKind::domination, starter).total_moves;
}

std::string paren(const std::string& name, int a) { return name + "(" + std::to_string(a) + ")"; }

std::string paren(const std::string& name, int a, int b) {
  return name + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::vector<ReferenceRow> reference_table(const ReferenceOptions& options) {
  std::vector<ReferenceRow> rows;
  auto add = [&rows](std::string group, std::string instance, std::string quantity,
                     std::string relation, int expected, int actual) {
    rows.push_back(ReferenceRow{std::move(group), std::move(instance), std::move(quantity),
                                std::move(relation), expected, actual});
  };

  for (int n = 2; n <= options.path_max; ++n) {
    const Graph p = path(n);
    add("enclaveless paths", paren("P", n), "psg_plus", "=", (3 * n + 1) / 5,
        enclaveless_value(p, Role::maximizer));
    add("enclaveless paths", paren("P", n), "psg_minus", "=", 3 * n / 5,
        enclaveless_value(p, Role::minimizer));
  }
  for (int n = 2; n <= options.path_max; ++n) {
    const Graph p = path(n);
    const int half = (n + 1) / 2;
    add("domination paths", paren("P", n), "gg", "=", n % 4 == 3 ? half - 1 : half,
        domination_value(p, kDominator));
    add("domination paths", paren("P", n), "ggp", "=", half, domination_value(p, kStaller));
  }
  for (int k = 1; k <= 5; ++k) {
    const Graph s = star(k);
    add("stars", "K_1," + std::to_string(k), "psg_plus", "=", k, enclaveless_value(s, Role::maximizer));
    add("stars", "K_1," + std::to_string(k), "psg_minus", "=", 1, enclaveless_value(s, Role::minimizer));
  }
  for (int k : {3, 4}) {
    const Graph s = double_star(k);
    const std::string name = paren("S", k, k);
    add("double stars", name, "psg_plus", "=", k + 1, enclaveless_value(s, Role::maximizer));
    add("double stars", name, "psg_minus", "=", k + 1, enclaveless_value(s, Role::minimizer));
    add("double stars", name, "gg", "=", 3, domination_value(s, kDominator));
    add("double stars", name, "ggp", "=", 4, domination_value(s, kStaller));
  }

  for (const auto& [name, g] : {std::pair{std::string("C7"), cycle(7)},
                                std::pair{std::string("P10"), path(10)}}) {
    const int target = g.order() - domination_number(g);
    add("well-dominated", name, "psg_plus", "=", target, enclaveless_value(g, Role::maximizer));
    add("well-dominated", name, "psg_minus", "=", target, enclaveless_value(g, Role::minimizer));
  }
  for (int h = 1; h <= 5; ++h) {
    // Count connected H of order h whose corona has both values equal to h.
    std::vector<Graph> hosts;
    if (h == 1) {
      hosts.push_back(Graph());
    } else {
      const LabeledCorpus labeled(h, true);
      for (std::size_t i = 0; i < labeled.size(); ++i) {
        if (auto g = labeled.at(i); g && g->order() == h) hosts.push_back(*g);
      }
    }
    int matching = 0;
    for (const Graph& host : hosts) {
      const Graph c = corona(host);
      if (enclaveless_value(c, Role::maximizer) == h && enclaveless_value(c, Role::minimizer) == h) {
        ++matching;
      }
    }
    add("well-dominated", "cor(H), H connected labeled, |V(H)|=" + std::to_string(h),
        "hosts with psg_plus = psg_minus = |V(H)|", "=", static_cast<int>(hosts.size()), matching);
  }

  add("connector ring", "F_2 with r=4", "psg_minus", "=", 8,
      enclaveless_value(connector_ring(2, 4), Role::minimizer));
  add("connector ring", "F_2 with r=3", "psg_plus", "=", 6,
      enclaveless_value(connector_ring(2, 3), Role::maximizer));
  {
    const Graph ring = connector_ring(2, 4);
    const ConnectorStrategy connector(ring);
    const SimulationResult sim =
        simulate(ring, GameKind::enclaveless, Role::minimizer, Role::maximizer, connector);
    add("strategies", "connector strategy on F_2 with r=4", "scripted Maximizer total", ">=", 8,
        sim.total_moves);
  }

  {
    int members = 0;
    int extremal = 0;
    int game_ok = 0;
    int p3_minus = -1;
    for (const PartitionedGraph& pg : family_f_members(4, 13)) {
      ++members;
      const Graph& g = pg.graph;
      const bool ir_ok = 2 * upper_irredundance_number(g) == g.order() + 1;
      const std::vector<VertexSet> ir_sets = maximum_irredundant_sets(g);
      const std::vector<VertexSet> alpha_sets = maximum_independent_sets(g);
      const std::vector<VertexSet> gamma_sets = upper_domination_sets(g);
      const auto only_b = [&](const std::vector<VertexSet>& sets) {
        return sets.size() == 1 && sets.front() == pg.B;
      };
      if (ir_ok && only_b(ir_sets) && only_b(alpha_sets) && only_b(gamma_sets)) ++extremal;
      const bool p3 = g.order() == 3;
      const int plus = enclaveless_value(g, Role::maximizer);
      const int minus = enclaveless_value(g, Role::minimizer);
      if (p3) p3_minus = minus;
      if (2 * plus >= g.order() && (p3 || 2 * minus >= g.order())) ++game_ok;
    }
    add("family F", "members of order <= 13, trees of order <= 4, q <= 2",
        "IR = (n+1)/2, B the unique IR-, alpha- and Gamma-set", "=", members, extremal);
    add("family F", "members of order <= 13, trees of order <= 4, q <= 2",
        "psg_plus >= n/2, and psg_minus >= n/2 unless P3", "=", members, game_ok);
    add("family F", "P3", "psg_minus", "=", 1, p3_minus);
  }

  if (options.heavy) {
    const Graph g = corona_path(10);
    add("corona ratio", "cor(P10)", "psg_plus", "=", 10, enclaveless_value(g, Role::maximizer));
    add("corona ratio", "cor(P10)", "gg", ">=", 11, domination_value(g, kDominator));
    const StallerBlockStrategy staller(g);
    const SimulationResult sim = simulate(g, GameKind::domination, kDominator, kStaller, staller);
    add("strategies", "Staller block strategy on cor(P10)", "scripted Staller total", ">=", 11,
        sim.total_moves);
  }
  return rows;
}

std::string format_reference_table(std::span<const ReferenceRow> rows) {
  std::size_t instance_width = 0;
  std::size_t quantity_width = 0;
  for (const ReferenceRow& row : rows) {
    instance_width = std::max(instance_width, row.instance.size());
    quantity_width = std::max(quantity_width, row.quantity.size());
  }
  std::ostringstream out;
  std::string group;
  int failures = 0;
  for (const ReferenceRow& row : rows) {
    if (row.group != group) {
      group = row.group;
      out << group << '\n';
    }
    out << "  " << std::left << std::setw(static_cast<int>(instance_width)) << row.instance << "  "
        << std::setw(static_cast<int>(quantity_width)) << row.quantity << std::right << ' '
        << std::setw(2) << row.relation << ' ' << std::setw(4) << row.expected << "  got "
        << std::setw(4) << row.actual << "  " << (row.passed() ? "ok" : "MISMATCH") << '\n';
    if (!row.passed()) ++failures;
  }
  out << rows.size() << " rows, " << failures << " mismatches\n";
  return out.str();
}

}  // namespace enclave
