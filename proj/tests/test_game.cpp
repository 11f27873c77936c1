#include "doctest.h"

#include <random>

#include "enclave/errors.hpp"
#include "enclave/families.hpp"
#include "enclave/game.hpp"
#include "enclave/invariants.hpp"
#include "enclave/strategies.hpp"
#include "oracles.hpp"

using namespace enclave;

namespace {

int value(const Graph& g, GameKind kind, Role starter, SolverOptions o = {}) {
  return solve(g, kind, starter, o).total_moves;
}

// Replays a line from the initial position and returns the final position.
Position replay(const Graph& g, GameKind kind, Role starter, const std::vector<int>& line) {
  Position p = Position::initial(g, kind, starter);
  for (int v : line) p = apply_move(p, v);
  return p;
}

}  // namespace

TEST_CASE("legal moves") {
  const Graph p3 = path(3);
  const Position start = Position::initial(p3, GameKind::enclaveless, Role::maximizer);
  CHECK(legal_moves(start) == VertexSet{0, 1, 2});
  CHECK(legal_moves(apply_move(start, 1)).empty());
  CHECK(is_terminal(apply_move(start, 1)));

  const Graph k2 = path(2);
  CHECK(legal_moves(Position::initial(k2, GameKind::domination, kDominator)) == VertexSet{0, 1});
}

TEST_CASE("apply_move") {
  const Graph p3 = path(3);
  const Position start = Position::initial(p3, GameKind::enclaveless, Role::maximizer);
  const Position after = apply_move(start, 1);
  CHECK(after.played() == VertexSet{1});
  CHECK(after.mover() == Role::minimizer);
  CHECK(after.moves_made() == 1);

  const Graph c4 = cycle(4);
  const Position d = apply_move(Position::initial(c4, GameKind::domination, kDominator), 0);
  CHECK(d.covered() == VertexSet{0, 1, 3});

  const Position k2 = apply_move(Position::initial(path(2), GameKind::enclaveless, Role::maximizer), 0);
  CHECK_THROWS_AS(apply_move(k2, 1), illegal_move);
  CHECK_THROWS_AS(apply_move(k2, 0), illegal_move);
  CHECK_THROWS_AS(apply_move(k2, 7), illegal_move);
}

TEST_CASE("positions keep their invariants along random games") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 10, 0.4);
    const GameKind kind = trial % 2 == 0 ? GameKind::enclaveless : GameKind::domination;
    const Role starter = trial % 4 < 2 ? Role::maximizer : Role::minimizer;
    Position p = Position::initial(g, kind, starter);
    while (!is_terminal(p)) {
      const std::vector<int> moves = legal_moves(p).to_vector();
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      p = apply_move(p, moves[pick(rng)]);
      CHECK((p.mover() == p.starter()) == (p.moves_made() % 2 == 0));
      if (kind == GameKind::enclaveless) {
        CHECK(is_enclaveless(g, p.played()));
      } else {
        CHECK(p.covered() == dominated_by(g, p.played()));
      }
    }
    if (kind == GameKind::enclaveless) {
      CHECK(is_maximal_enclaveless(g, p.played()));
    } else {
      CHECK(is_dominating(g, p.played()));
    }
  }
}

TEST_CASE("position_from derives the mover") {
  const Graph p5 = path(5);
  const Position p = position_from(p5, GameKind::enclaveless, Role::maximizer, VertexSet{1, 3});
  CHECK(p.mover() == Role::maximizer);
  CHECK(position_from(p5, GameKind::enclaveless, Role::maximizer, VertexSet{1}).mover() ==
        Role::minimizer);
  CHECK_THROWS_AS(position_from(p5, GameKind::enclaveless, Role::maximizer, VertexSet{0, 1}),
                  illegal_move);
}

TEST_CASE("solver examples") {
  CHECK(value(path(5), GameKind::enclaveless, Role::maximizer) == 3);
  CHECK(value(star(4), GameKind::enclaveless, Role::minimizer) == 1);
  CHECK(value(double_star(3), GameKind::enclaveless, Role::maximizer) == 4);
  CHECK(value(double_star(3), GameKind::enclaveless, Role::minimizer) == 4);
  CHECK(value(path(7), GameKind::domination, kDominator) == 3);
  CHECK(value(path(5), GameKind::domination, kStaller) == 3);
  CHECK(value(cycle(4), GameKind::enclaveless, Role::maximizer) == 2);
  CHECK(value(cycle(4), GameKind::enclaveless, Role::minimizer) == 2);
  CHECK(value(Graph(), GameKind::enclaveless, Role::maximizer) == 0);
  CHECK(value(Graph(), GameKind::domination, kDominator) == 1);
}

TEST_CASE("solver agrees with plain recursive minimax") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 8, trial % 2 == 0 ? 0.3 : 0.55);
    CHECK(value(g, GameKind::enclaveless, Role::maximizer) == oracle::enclaveless_game(g, true));
    CHECK(value(g, GameKind::enclaveless, Role::minimizer) == oracle::enclaveless_game(g, false));
    if (g.order() <= 7) {
      CHECK(value(g, GameKind::domination, kStaller) == oracle::domination_game(g, true));
      CHECK(value(g, GameKind::domination, kDominator) == oracle::domination_game(g, false));
    }
  }
}

TEST_CASE("memo, mover-keyed memo and alpha-beta are transparent") {
  std::mt19937_64 rng(47);
  SolverOptions plain;
  plain.memoize = false;
  SolverOptions keyed;
  keyed.key_with_mover = true;
  SolverOptions pruned;
  pruned.alpha_beta = true;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.4);
    for (GameKind kind : {GameKind::enclaveless, GameKind::domination}) {
      for (Role starter : {Role::maximizer, Role::minimizer}) {
        const int reference = value(g, kind, starter);
        CHECK(value(g, kind, starter, plain) == reference);
        CHECK(value(g, kind, starter, keyed) == reference);
        CHECK(value(g, kind, starter, pruned) == reference);
      }
    }
  }
}

TEST_CASE("principal variations replay to the claimed value") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 11, 0.4);
    for (GameKind kind : {GameKind::enclaveless, GameKind::domination}) {
      for (Role starter : {Role::maximizer, Role::minimizer}) {
        const GameOutcome o = solve(g, kind, starter);
        CHECK(static_cast<int>(o.principal_variation.size()) == o.total_moves);
        const Position end = replay(g, kind, starter, o.principal_variation);
        CHECK(is_terminal(end));
        CHECK(end.moves_made() == o.total_moves);
        if (!o.principal_variation.empty()) {
          CHECK(o.optimal_first_moves.contains(o.principal_variation.front()));
        }
        // every advertised first move is optimal
        Solver solver(g, kind);
        const Position start = Position::initial(g, kind, starter);
        for (int v : o.optimal_first_moves) {
          CHECK(1 + solver.remaining(apply_move(start, v)) == o.total_moves);
        }
      }
    }
  }
}

TEST_CASE("values lie between psi and Psi") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.45);
    const InvariantReport r = compute_invariants(g);
    for (Role starter : {Role::maximizer, Role::minimizer}) {
      const int v = value(g, GameKind::enclaveless, starter);
      CHECK(r.psi <= v);
      CHECK(v <= r.Psi);
    }
  }
}

TEST_CASE("solving from a mid-game position") {
  const Graph p7 = path(7);
  Solver solver(p7, GameKind::enclaveless);
  const Position p = apply_move(Position::initial(p7, GameKind::enclaveless, Role::maximizer), 3);
  const GameOutcome o = solver.solve(p);
  CHECK(o.total_moves == 1 + solver.remaining(p));
  CHECK(static_cast<int>(o.principal_variation.size()) == o.total_moves - 1);
  CHECK(oracle::enclaveless_game(oracle::Matrix(p7), std::uint64_t{1} << 3, false) == o.total_moves);

  const Graph other = path(6);
  const Position foreign = Position::initial(other, GameKind::enclaveless, Role::maximizer);
  CHECK_THROWS_AS(solver.solve(foreign), std::invalid_argument);
}

TEST_CASE("solver caps") {
  CHECK_THROWS_AS(Solver(path(25), GameKind::enclaveless), cap_exceeded);
  CHECK_THROWS_AS(Solver(path(23), GameKind::domination), cap_exceeded);
  SolverOptions small;
  small.cap = 5;
  CHECK_THROWS_AS(solve(path(6), GameKind::enclaveless, Role::maximizer, small), cap_exceeded);
  CHECK(solver_cap(GameKind::enclaveless, {}) == 24);
  CHECK(solver_cap(GameKind::domination, {}) == 22);
}

TEST_CASE("greedy scripted side stays between psi and Psi") {
  std::mt19937_64 rng(61);
  const GreedyStrategy greedy;
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.45);
    const InvariantReport r = compute_invariants(g);
    for (Role side : {Role::maximizer, Role::minimizer}) {
      for (Role starter : {Role::maximizer, Role::minimizer}) {
        const SimulationResult sim = simulate(g, GameKind::enclaveless, starter, side, greedy);
        const int exact = value(g, GameKind::enclaveless, starter);
        CHECK(r.psi <= sim.total_moves);
        CHECK(sim.total_moves <= r.Psi);
        // a scripted side can only do worse than optimal play
        if (side == Role::maximizer) {
          CHECK(sim.total_moves <= exact);
        } else {
          CHECK(sim.total_moves >= exact);
        }
        const Position end = replay(g, GameKind::enclaveless, starter, sim.line);
        CHECK(is_maximal_enclaveless(g, end.played()));
        CHECK(end.moves_made() == sim.total_moves);
      }
    }
  }
}

TEST_CASE("greedy on P5 ends maximal") {
  const Graph p5 = path(5);
  const GreedyStrategy greedy;
  const SimulationResult sim =
      simulate(p5, GameKind::enclaveless, Role::maximizer, Role::maximizer, greedy);
  CHECK(is_maximal_enclaveless(p5, VertexSet::from(sim.line)));
}

TEST_CASE("connector strategy on F_2 with r = 4") {
  const Graph ring = connector_ring(2, 4);
  const ConnectorStrategy connector(ring);
  const SimulationResult sim =
      simulate(ring, GameKind::enclaveless, Role::minimizer, Role::maximizer, connector);
  CHECK(sim.total_moves >= 8);
  CHECK(sim.fallback_count == 0);
  // all four connectors end up played on the realized line
  VertexSet connectors;
  for (int v = 0; v < ring.order(); ++v) {
    if (ring.label(v)[0] != 'h') connectors = connectors.with(v);
  }
  CHECK(connectors.subset_of(VertexSet::from(sim.line)));
}

TEST_CASE("strategies reject graphs without their labels") {
  CHECK_THROWS_AS(ConnectorStrategy(path(5)), strategy_fault);
  CHECK_THROWS_AS(StallerBlockStrategy(corona_path(5)), strategy_fault);
  CHECK_THROWS_AS(StallerBlockStrategy(path(20)), strategy_fault);
  CHECK_THROWS_AS(make_strategy("nope", path(3)), std::invalid_argument);
  CHECK(builtin_strategies().size() == 3);
}

namespace {

class Broken final : public Strategy {
 public:
  std::string_view name() const override { return "broken"; }
  StrategyChoice select(const Position& p, std::span<const int>) const override {
    return {p.played().empty() ? 0 : p.played().first(), false, {}};
  }
};

}  // namespace

TEST_CASE("an illegal scripted move is a strategy fault") {
  const Broken broken;
  CHECK_THROWS_AS(simulate(path(7), GameKind::enclaveless, Role::maximizer, Role::maximizer, broken),
                  strategy_fault);
}

TEST_CASE("role names") {
  CHECK(role_name(GameKind::enclaveless, Role::maximizer) == "Maximizer");
  CHECK(role_name(GameKind::domination, kStaller) == "Staller");
  CHECK(role_name(GameKind::domination, kDominator) == "Dominator");
  CHECK(opponent(Role::maximizer) == Role::minimizer);
}
