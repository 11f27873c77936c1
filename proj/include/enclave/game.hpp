#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "enclave/graph.hpp"

namespace enclave {

enum class GameKind { enclaveless, domination };

/// The enclaveless game is played by Maximizer and Minimizer; the domination
/// game by Staller (maximizing the move count) and Dominator (minimizing it).
enum class Role { maximizer, minimizer };

inline constexpr Role kStaller = Role::maximizer;
inline constexpr Role kDominator = Role::minimizer;

constexpr Role opponent(Role r) { return r == Role::maximizer ? Role::minimizer : Role::maximizer; }

std::string_view role_name(GameKind kind, Role role);
std::string_view kind_name(GameKind kind);

/// A game state. Holds a pointer to the graph, which must outlive it.
class Position {
 public:
  static Position initial(const Graph& g, GameKind kind, Role starter);

  const Graph& graph() const { return *graph_; }
  GameKind kind() const { return kind_; }
  /// Vertices chosen so far (the set S in the enclaveless game).
  VertexSet played() const { return played_; }
  /// Union of N[v] over played v. Meaningful for the domination game.
  VertexSet covered() const { return covered_; }
  Role mover() const { return mover_; }
  Role starter() const { return starter_; }
  int moves_made() const { return played_.size(); }

 private:
  friend Position apply_move(const Position& p, int v);
  friend Position position_from(const Graph&, GameKind, Role, VertexSet);

  Position(const Graph* g, GameKind kind, Role starter)
      : graph_(g), kind_(kind), mover_(starter), starter_(starter) {}

  const Graph* graph_;
  GameKind kind_;
  VertexSet played_;
  VertexSet covered_;
  Role mover_;
  Role starter_;
};

/// Position after `played` has been chosen in some order, with the mover
/// derived from the parity of |played|. Throws illegal_move when `played`
/// is not enclaveless in the enclaveless game.
Position position_from(const Graph& g, GameKind kind, Role starter, VertexSet played);

/// Enclaveless: playable vertices. Domination: vertices with an undominated
/// vertex in their closed neighborhood.
VertexSet legal_moves(const Position& p);
bool is_terminal(const Position& p);
/// Throws illegal_move.
Position apply_move(const Position& p, int v);

struct GameOutcome {
  /// Vertices played at the end of the game under optimal play.
  int total_moves = 0;
  /// Every legal first move achieving the optimum.
  VertexSet optimal_first_moves;
  /// Optimal line from the solved position, ties broken to the lowest id.
  std::vector<int> principal_variation;
};

inline constexpr int kEnclavelessSolverCap = 24;
inline constexpr int kDominationSolverCap = 22;

struct SolverOptions {
  bool memoize = true;
  /// Key the enclaveless memo by (played, mover) instead of played alone.
  bool key_with_mover = false;
  /// Alpha-beta search with a bound-storing table instead of plain minimax.
  bool alpha_beta = false;
  /// 0 selects the per-kind default.
  int cap = 0;
};

int solver_cap(GameKind kind, const SolverOptions& options);

/// Exact minimax solver for one graph and game kind. Not thread safe; use one
/// instance per thread.
class Solver {
 public:
  Solver(const Graph& g, GameKind kind, SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  GameOutcome solve(Role starter);
  GameOutcome solve(const Position& from);
  /// Moves still to be played from `p` under optimal play.
  int remaining(const Position& p);

  std::uint64_t nodes_searched() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

GameOutcome solve(const Graph& g, GameKind kind, Role starter, const SolverOptions& options = {});

/// Choice made by a scripted strategy.
struct StrategyChoice {
  int vertex = -1;
  /// The scripted rules did not cover the position and a default was used.
  bool fallback = false;
  std::string note;
};

/// Deterministic move selector for one side.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string_view name() const = 0;
  /// `history` lists every move from the initial position in order.
  virtual StrategyChoice select(const Position& p, std::span<const int> history) const = 0;
  /// Summary of the history that `select` depends on, beyond `p.played()`.
  /// Positions with equal played sets and equal keys must behave identically.
  virtual std::uint64_t memo_key(const Position& p, std::span<const int> history) const;
};

struct SimulationResult {
  /// Total vertices played when the scripted side follows its strategy and the
  /// other side answers optimally against it.
  int total_moves = 0;
  /// One game realizing that value (lowest-id ties for the optimal side).
  std::vector<int> line;
  /// Scripted decisions in the explored tree that used a fallback.
  int fallback_count = 0;
  int fallbacks_on_line = 0;
  std::vector<std::string> fallback_log;
};

/// Plays `strategy` for `scripted_side` against an exact opponent. Throws
/// strategy_fault when the strategy picks an illegal vertex.
SimulationResult simulate(const Graph& g, GameKind kind, Role starter, Role scripted_side,
                          const Strategy& strategy, const SolverOptions& options = {});

}  // namespace enclave
