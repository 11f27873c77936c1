#include "enclave/game.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

#include "enclave/errors.hpp"

namespace enclave {

std::string_view role_name(GameKind kind, Role role) {
  if (kind == GameKind::enclaveless) return role == Role::maximizer ? "Maximizer" : "Minimizer";
  return role == kStaller ? "Staller" : "Dominator";
}

std::string_view kind_name(GameKind kind) {
  return kind == GameKind::enclaveless ? "enclaveless" : "domination";
}

namespace {

// Legal-move generation on raw masks with N[v] precomputed.
class Rules {
 public:
  Rules(const Graph& g, GameKind kind) : kind_(kind), all_(g.vertices()) {
    open_.reserve(static_cast<std::size_t>(g.order()));
    closed_.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
      open_.push_back(g.raw_neighbors(v));
      closed_.push_back(g.raw_neighbors(v).with(v));
    }
  }

  VertexSet legal(VertexSet played, VertexSet covered) const {
    return kind_ == GameKind::enclaveless ? playable(played) : undominating(covered);
  }

  VertexSet closed(int v) const { return closed_[static_cast<std::size_t>(v)]; }
  VertexSet all() const { return all_; }

  // Upper bound on the moves left in a non-terminal position.
  int max_remaining(VertexSet played, VertexSet covered) const {
    return kind_ == GameKind::enclaveless ? (all_ - played).size() : (all_ - covered).size();
  }

 private:
  // A vertex v outside S is playable unless N(v) is inside S or v is the last
  // missing vertex of some N[u], u in S.
  VertexSet playable(VertexSet s) const {
    VertexSet forbidden;
    for (int u : s) {
      VertexSet missing = closed(u) - s;
      if (missing.size() == 1) forbidden |= missing;
    }
    VertexSet out;
    for (int v : all_ - s - forbidden) {
      if (!open_[static_cast<std::size_t>(v)].subset_of(s)) out = out.with(v);
    }
    return out;
  }

  VertexSet undominating(VertexSet covered) const {
    VertexSet out;
    for (int v : all_) {
      if (!closed(v).subset_of(covered)) out = out.with(v);
    }
    return out;
  }

  GameKind kind_;
  VertexSet all_;
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
};

// Memo keyed by (mask, tag) with tag in {0, 1}. Dense for small orders.
template <typename Entry>
class StateTable {
 public:
  StateTable() = default;
  StateTable(int order, Entry empty) : order_(order), empty_(empty) {
    if (order <= kDenseOrder) dense_.assign(std::size_t{2} << order, empty);
  }

  Entry get(std::uint64_t mask, unsigned tag) const {
    if (!dense_.empty()) return dense_[index(mask, tag)];
    auto it = sparse_.find(Key{mask, tag});
    return it == sparse_.end() ? empty_ : it->second;
  }

  void put(std::uint64_t mask, unsigned tag, Entry e) {
    if (!dense_.empty()) {
      dense_[index(mask, tag)] = e;
    } else {
      sparse_[Key{mask, tag}] = e;
    }
  }

 private:
  static constexpr int kDenseOrder = 24;

  struct Key {
    std::uint64_t mask;
    unsigned tag;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>{}(k.mask * 0x9E3779B97F4A7C15ULL ^ k.tag);
    }
  };

  std::size_t index(std::uint64_t mask, unsigned tag) const {
    return static_cast<std::size_t>(mask) | (static_cast<std::size_t>(tag) << order_);
  }

  int order_ = 0;
  Entry empty_{};
  std::vector<Entry> dense_;
  std::unordered_map<Key, Entry, KeyHash> sparse_;
};

struct Bounds {
  std::int8_t lo;
  std::int8_t hi;
};

constexpr std::int8_t kUnknown = -1;

unsigned role_tag(Role r) { return r == Role::maximizer ? 0U : 1U; }

}  // namespace

Position Position::initial(const Graph& g, GameKind kind, Role starter) {
  return Position(&g, kind, starter);
}

Position position_from(const Graph& g, GameKind kind, Role starter, VertexSet played) {
  if (!played.subset_of(g.vertices())) throw illegal_move("played set has ids outside the graph");
  Position p(&g, kind, starter);
  p.played_ = played;
  for (int v : played) p.covered_ |= g.closed_neighborhood(v);
  if (kind == GameKind::enclaveless) {
    for (int v : played) {
      if (g.closed_neighborhood(v).subset_of(played)) {
        throw illegal_move("played set " + to_string(played) + " has enclave " + std::to_string(v));
      }
    }
  }
  p.mover_ = played.size() % 2 == 0 ? starter : opponent(starter);
  return p;
}

VertexSet legal_moves(const Position& p) {
  return Rules(p.graph(), p.kind()).legal(p.played(), p.covered());
}

bool is_terminal(const Position& p) { return legal_moves(p).empty(); }

Position apply_move(const Position& p, int v) {
  if (!legal_moves(p).contains(v)) {
    throw illegal_move("vertex " + std::to_string(v) + " is not a legal " +
                       std::string(kind_name(p.kind())) + " move after " + to_string(p.played()));
  }
  Position next = p;
  next.played_ = p.played_.with(v);
  next.covered_ = p.covered_ | p.graph().closed_neighborhood(v);
  next.mover_ = opponent(p.mover_);
  return next;
}

int solver_cap(GameKind kind, const SolverOptions& options) {
  if (options.cap > 0) return options.cap;
  return kind == GameKind::enclaveless ? kEnclavelessSolverCap : kDominationSolverCap;
}

class Solver::Impl {
 public:
  Impl(const Graph& g, GameKind kind, SolverOptions options)
      : graph_(g), kind_(kind), options_(options), rules_(g, kind) {
    const int cap = solver_cap(kind, options);
    if (g.order() > cap) {
      throw cap_exceeded(std::string(kind_name(kind)) + " solver: order " +
                         std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
    }
  }

  int remaining(VertexSet played, VertexSet covered, Role mover, Role starter) {
    if (options_.alpha_beta) {
      return bounded(played, covered, mover, starter, -1, graph_.order() + 1);
    }
    return exact(played, covered, mover, starter);
  }

  GameOutcome solve(const Position& from) {
    GameOutcome out;
    const Role starter = from.starter();
    VertexSet played = from.played();
    VertexSet covered = from.covered();
    Role mover = from.mover();
    const int base = played.size();
    out.total_moves = base + remaining(played, covered, mover, starter);

    bool first = true;
    while (true) {
      VertexSet moves = rules_.legal(played, covered);
      if (moves.empty()) break;
      const int target = remaining(played, covered, mover, starter);
      int chosen = -1;
      for (int v : moves) {
        int value = 1 + remaining(played.with(v), covered | rules_.closed(v), opponent(mover), starter);
        if (value != target) continue;
        if (chosen < 0) chosen = v;
        if (!first) break;
        out.optimal_first_moves = out.optimal_first_moves.with(v);
      }
      first = false;
      out.principal_variation.push_back(chosen);
      played = played.with(chosen);
      covered |= rules_.closed(chosen);
      mover = opponent(mover);
    }
    return out;
  }

  const Graph& graph() const { return graph_; }
  GameKind kind() const { return kind_; }

  void check_compatible(const Position& p) const {
    if (p.kind() != kind_ || !(p.graph() == graph_)) {
      throw std::invalid_argument("position belongs to a different graph or game kind");
    }
  }

  std::uint64_t nodes = 0;

 private:
  // Which memo table and tag a state uses.
  std::pair<StateTable<std::int8_t>*, unsigned> slot(Role mover, Role starter) {
    const bool by_played_only = kind_ == GameKind::enclaveless && !options_.key_with_mover;
    StateTable<std::int8_t>& table = by_played_only ? memo_[role_tag(starter)] : memo_[0];
    if (!ready_[by_played_only ? role_tag(starter) : 0]) {
      table = StateTable<std::int8_t>(graph_.order(), kUnknown);
      ready_[by_played_only ? role_tag(starter) : 0] = true;
    }
    return {&table, by_played_only ? 0U : role_tag(mover)};
  }

  std::uint64_t key_mask(VertexSet played, VertexSet covered) const {
    return kind_ == GameKind::enclaveless ? played.bits() : covered.bits();
  }

  int exact(VertexSet played, VertexSet covered, Role mover, Role starter) {
    ++nodes;
    VertexSet moves = rules_.legal(played, covered);
    if (moves.empty()) return 0;
    StateTable<std::int8_t>* table = nullptr;
    unsigned tag = 0;
    const std::uint64_t mask = key_mask(played, covered);
    if (options_.memoize) {
      std::tie(table, tag) = slot(mover, starter);
      std::int8_t known = table->get(mask, tag);
      if (known != kUnknown) return known;
    }
    const bool maximizing = mover == Role::maximizer;
    int best = maximizing ? INT_MIN : INT_MAX;
    for (int v : moves) {
      int value = 1 + exact(played.with(v), covered | rules_.closed(v), opponent(mover), starter);
      best = maximizing ? std::max(best, value) : std::min(best, value);
    }
    if (table != nullptr) table->put(mask, tag, static_cast<std::int8_t>(best));
    return best;
  }

  // Fail-soft alpha-beta; the table keeps proven [lo, hi] bounds per state.
  int bounded(VertexSet played, VertexSet covered, Role mover, Role starter, int alpha, int beta) {
    ++nodes;
    VertexSet moves = rules_.legal(played, covered);
    if (moves.empty()) return 0;
    const bool by_played_only = kind_ == GameKind::enclaveless && !options_.key_with_mover;
    const unsigned index = by_played_only ? role_tag(starter) : 0U;
    if (!bounds_ready_[index]) {
      bounds_[index] = StateTable<Bounds>(graph_.order(), Bounds{kUnknown, kUnknown});
      bounds_ready_[index] = true;
    }
    StateTable<Bounds>& table = bounds_[index];
    const unsigned tag = by_played_only ? 0U : role_tag(mover);
    const std::uint64_t mask = key_mask(played, covered);

    Bounds b = table.get(mask, tag);
    if (b.lo == kUnknown) {
      b.lo = 1;
      b.hi = static_cast<std::int8_t>(rules_.max_remaining(played, covered));
    }
    if (b.lo == b.hi || b.lo >= beta) return b.lo;
    if (b.hi <= alpha) return b.hi;
    const int a = std::max(alpha, static_cast<int>(b.lo));
    const int z = std::min(beta, static_cast<int>(b.hi));

    int best;
    if (mover == Role::maximizer) {
      best = INT_MIN;
      int window = a;
      for (int v : moves) {
        int value = 1 + bounded(played.with(v), covered | rules_.closed(v), opponent(mover),
                                starter, window - 1, z - 1);
        best = std::max(best, value);
        window = std::max(window, best);
        if (best >= z) break;
      }
    } else {
      best = INT_MAX;
      int window = z;
      for (int v : moves) {
        int value = 1 + bounded(played.with(v), covered | rules_.closed(v), opponent(mover),
                                starter, a - 1, window - 1);
        best = std::min(best, value);
        window = std::min(window, best);
        if (best <= a) break;
      }
    }
    if (best <= a) {
      b.hi = static_cast<std::int8_t>(std::min(static_cast<int>(b.hi), best));
    } else if (best >= z) {
      b.lo = static_cast<std::int8_t>(std::max(static_cast<int>(b.lo), best));
    } else {
      b.lo = b.hi = static_cast<std::int8_t>(best);
    }
    table.put(mask, tag, b);
    return best;
  }

  Graph graph_;
  GameKind kind_;
  SolverOptions options_;
  Rules rules_;
  std::array<StateTable<std::int8_t>, 2> memo_;
  std::array<bool, 2> ready_{false, false};
  std::array<StateTable<Bounds>, 2> bounds_;
  std::array<bool, 2> bounds_ready_{false, false};
};

Solver::Solver(const Graph& g, GameKind kind, SolverOptions options)
    : impl_(std::make_unique<Impl>(g, kind, options)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

GameOutcome Solver::solve(Role starter) {
  return impl_->solve(Position::initial(impl_->graph(), impl_->kind(), starter));
}

GameOutcome Solver::solve(const Position& from) {
  impl_->check_compatible(from);
  return impl_->solve(from);
}

int Solver::remaining(const Position& p) {
  impl_->check_compatible(p);
  return impl_->remaining(p.played(), p.covered(), p.mover(), p.starter());
}

std::uint64_t Solver::nodes_searched() const { return impl_->nodes; }

GameOutcome solve(const Graph& g, GameKind kind, Role starter, const SolverOptions& options) {
  return Solver(g, kind, options).solve(starter);
}

std::uint64_t Strategy::memo_key(const Position&, std::span<const int> history) const {
  return history.empty() ? 0 : static_cast<std::uint64_t>(history.back()) + 1;
}

namespace {

class Simulator {
 public:
  Simulator(const Graph& g, GameKind kind, Role scripted, const Strategy& strategy)
      : rules_(g, kind), scripted_(scripted), strategy_(strategy) {}

  int value(const Position& p, std::vector<int>& history) {
    VertexSet moves = rules_.legal(p.played(), p.covered());
    if (moves.empty()) return 0;
    const Key key{p.played().bits(), strategy_.memo_key(p, history)};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int result;
    if (p.mover() == scripted_) {
      const int v = choose(p, history, moves, true);
      result = 1 + descend(p, v, history);
    } else {
      const bool maximizing = p.mover() == Role::maximizer;
      result = maximizing ? INT_MIN : INT_MAX;
      for (int v : moves) {
        int child = 1 + descend(p, v, history);
        result = maximizing ? std::max(result, child) : std::min(result, child);
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  // Replays one game that realizes the simulated value.
  void trace(Position p, std::vector<int>& history, SimulationResult& out) {
    while (true) {
      VertexSet moves = rules_.legal(p.played(), p.covered());
      if (moves.empty()) return;
      int chosen = -1;
      if (p.mover() == scripted_) {
        StrategyChoice c = strategy_.select(p, history);
        if (c.fallback) ++out.fallbacks_on_line;
        chosen = c.vertex;
      } else {
        const int target = value(p, history);
        for (int v : moves) {
          if (1 + descend(p, v, history) == target) {
            chosen = v;
            break;
          }
        }
      }
      history.push_back(chosen);
      p = apply_move(p, chosen);
    }
  }

  int fallback_count = 0;
  std::vector<std::string> fallback_log;

 private:
  static constexpr std::size_t kMaxLogLines = 200;

  struct Key {
    std::uint64_t played;
    std::uint64_t strategy;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>{}(k.played * 0x9E3779B97F4A7C15ULL ^ k.strategy);
    }
  };

  int descend(const Position& p, int v, std::vector<int>& history) {
    history.push_back(v);
    int result = value(apply_move(p, v), history);
    history.pop_back();
    return result;
  }

  int choose(const Position& p, std::span<const int> history, VertexSet moves, bool record) {
    StrategyChoice c = strategy_.select(p, history);
    if (!moves.contains(c.vertex)) {
      std::ostringstream msg;
      msg << "strategy '" << strategy_.name() << "' chose illegal vertex " << c.vertex
          << " with played=" << to_string(p.played()) << " history=[";
      for (std::size_t i = 0; i < history.size(); ++i) msg << (i ? "," : "") << history[i];
      msg << "]";
      throw strategy_fault(msg.str());
    }
    if (record && c.fallback) {
      ++fallback_count;
      if (fallback_log.size() < kMaxLogLines) {
        std::ostringstream line;
        line << "fallback to " << c.vertex << " at history [";
        for (std::size_t i = 0; i < history.size(); ++i) line << (i ? "," : "") << history[i];
        line << "]";
        if (!c.note.empty()) line << ": " << c.note;
        fallback_log.push_back(line.str());
      }
    }
    return c.vertex;
  }

  Rules rules_;
  Role scripted_;
  const Strategy& strategy_;
  std::unordered_map<Key, int, KeyHash> memo_;
};

}  // namespace

SimulationResult simulate(const Graph& g, GameKind kind, Role starter, Role scripted_side,
                          const Strategy& strategy, const SolverOptions& options) {
  const int cap = solver_cap(kind, options);
  if (g.order() > cap) {
    throw cap_exceeded("simulation: order " + std::to_string(g.order()) + " exceeds cap " +
                       std::to_string(cap));
  }
  Simulator sim(g, kind, scripted_side, strategy);
  const Position start = Position::initial(g, kind, starter);
  std::vector<int> history;
  SimulationResult out;
  out.total_moves = sim.value(start, history);
  history.clear();
  sim.trace(start, history, out);
  out.line = history;
  out.fallback_count = sim.fallback_count;
  out.fallback_log = std::move(sim.fallback_log);
  return out;
}

}  // namespace enclave
