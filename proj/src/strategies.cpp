#include "enclave/strategies.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "enclave/errors.hpp"

namespace enclave {

namespace {

// Parses a positive decimal integer occupying all of `text`.
std::optional<int> parse_index(std::string_view text) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 1) return std::nullopt;
  return value;
}

StrategyChoice lowest_legal(VertexSet moves, std::string note) {
  return StrategyChoice{moves.first(), true, std::move(note)};
}

}  // namespace

StrategyChoice GreedyStrategy::select(const Position& p, std::span<const int>) const {
  return StrategyChoice{legal_moves(p).first(), false, {}};
}

ConnectorStrategy::ConnectorStrategy(const Graph& g) {
  if (!g.has_labels()) throw strategy_fault("connector strategy needs a labeled connector ring");
  block_of_.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    const std::string& text = g.label(v);
    std::optional<int> block;
    if (!text.empty() && (text[0] == 'x' || text[0] == 'y')) {
      block = parse_index(std::string_view(text).substr(1));
    } else if (!text.empty() && text[0] == 'h') {
      auto dot = text.find('.');
      if (dot != std::string::npos) block = parse_index(std::string_view(text).substr(1, dot - 1));
    }
    if (!block) throw strategy_fault("vertex " + std::to_string(v) + " has no connector-ring label");
    const auto b = static_cast<std::size_t>(*block - 1);
    if (connectors_.size() <= b) {
      connectors_.resize(b + 1);
      hidden_.resize(b + 1);
    }
    block_of_[static_cast<std::size_t>(v)] = *block - 1;
    if (text[0] == 'h') {
      hidden_[b] = hidden_[b].with(v);
    } else {
      connectors_[b] = connectors_[b].with(v);
      all_connectors_ = all_connectors_.with(v);
    }
  }
}

StrategyChoice ConnectorStrategy::select(const Position& p, std::span<const int> history) const {
  const VertexSet moves = legal_moves(p);
  if (!history.empty()) {
    const auto block = static_cast<std::size_t>(block_of_[static_cast<std::size_t>(history.back())]);
    if (VertexSet here = moves & connectors_[block]; !here.empty()) return {here.first(), false, {}};
    if (VertexSet here = moves & hidden_[block]; !here.empty()) return {here.first(), false, {}};
  }
  if (VertexSet any = moves & all_connectors_; !any.empty()) return {any.first(), false, {}};
  return {moves.first(), false, {}};
}

std::uint64_t ConnectorStrategy::memo_key(const Position&, std::span<const int> history) const {
  if (history.empty()) return 0;
  return static_cast<std::uint64_t>(block_of_[static_cast<std::size_t>(history.back())]) + 1;
}

StallerBlockStrategy::StallerBlockStrategy(const Graph& g) {
  if (!g.has_labels() || g.order() % 2 != 0) {
    throw strategy_fault("staller block strategy needs a labeled corona of a path");
  }
  path_order_ = g.order() / 2;
  if (path_order_ % 10 != 0) {
    throw strategy_fault("staller block strategy needs a path order divisible by 10, got " +
                         std::to_string(path_order_));
  }
  x_.assign(static_cast<std::size_t>(path_order_), -1);
  y_.assign(static_cast<std::size_t>(path_order_), -1);
  index_of_.assign(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v) {
    const std::string& text = g.label(v);
    std::optional<int> index;
    if (!text.empty() && (text[0] == 'x' || text[0] == 'y')) {
      index = parse_index(std::string_view(text).substr(1));
    }
    if (!index || *index > path_order_) {
      throw strategy_fault("vertex " + std::to_string(v) + " has no corona-path label");
    }
    auto& slot = (text[0] == 'x' ? x_ : y_)[static_cast<std::size_t>(*index - 1)];
    if (slot != -1) throw strategy_fault("duplicate corona-path label " + text);
    slot = v;
    index_of_[static_cast<std::size_t>(v)] = *index;
  }
}

std::vector<StallerBlockStrategy::BlockState> StallerBlockStrategy::replay(
    const Position& p, std::span<const int> history, bool& last_opened) const {
  std::vector<BlockState> blocks(static_cast<std::size_t>(path_order_ / 10));
  last_opened = false;
  int opened_by_dominator = -1;  // block Dominator opened with the previous move
  for (std::size_t t = 0; t < history.size(); ++t) {
    const int v = history[t];
    const int index = index_of_[static_cast<std::size_t>(v)];
    const auto b = static_cast<std::size_t>((index - 1) / 10);
    const Role mover = t % 2 == 0 ? p.starter() : opponent(p.starter());
    if (mover == kDominator) {
      const bool opens = blocks[b].open;
      blocks[b].open = false;
      ++blocks[b].dominator_moves;
      opened_by_dominator = opens ? static_cast<int>(b) : -1;
      last_opened = opens;
    } else {
      if (opened_by_dominator >= 0 && y_[static_cast<std::size_t>(index - 1)] == v &&
          static_cast<std::size_t>(opened_by_dominator) == b) {
        blocks[b].leaf_index = index - 10 * static_cast<int>(b);
      }
      blocks[b].open = false;
      opened_by_dominator = -1;
      last_opened = false;
    }
  }
  return blocks;
}

StrategyChoice StallerBlockStrategy::select(const Position& p, std::span<const int> history) const {
  const VertexSet moves = legal_moves(p);
  const bool dominator_last = !history.empty() && p.mover() == kStaller;
  if (!dominator_last) return lowest_legal(moves, "no Dominator move to answer");

  bool last_opened = false;
  std::vector<BlockState> blocks = replay(p, history, last_opened);
  const int last = history.back();
  const int index = index_of_[static_cast<std::size_t>(last)];
  const int b = (index - 1) / 10;
  const int local = index - 10 * b;

  if (last_opened) {
    const int target_local = local <= 5 ? 8 : 3;
    const int target = y_[static_cast<std::size_t>(10 * b + target_local - 1)];
    if (moves.contains(target)) return {target, false, {}};
    return lowest_legal(moves, "opening leaf y" + std::to_string(10 * b + target_local) +
                                   " not playable");
  }
  const BlockState& state = blocks[static_cast<std::size_t>(b)];
  if (state.dominator_moves == 2 && state.leaf_index != 0) {
    const int support = x_[static_cast<std::size_t>(10 * b + state.leaf_index - 1)];
    if (moves.contains(support)) return {support, false, {}};
    return lowest_legal(moves, "support vertex x" + std::to_string(10 * b + state.leaf_index) +
                                   " not playable");
  }
  return lowest_legal(moves, "no scripted response for Dominator move " + std::to_string(last) +
                                 " (block " + std::to_string(b) + ", Dominator move " +
                                 std::to_string(state.dominator_moves) + " there)");
}

std::uint64_t StallerBlockStrategy::memo_key(const Position& p, std::span<const int> history) const {
  bool last_opened = false;
  std::vector<BlockState> blocks = replay(p, history, last_opened);
  std::uint64_t key = history.empty() ? 0 : static_cast<std::uint64_t>(history.back()) + 1;
  key = key << 1 | (last_opened ? 1U : 0U);
  for (const BlockState& s : blocks) {
    key = key << 7 | (s.open ? 1U : 0U) << 6 | static_cast<std::uint64_t>(s.leaf_index) << 2 |
          static_cast<std::uint64_t>(std::min(s.dominator_moves, 3));
  }
  return key;
}

std::vector<std::string> builtin_strategies() { return {"greedy", "connector", "staller-block"}; }

std::unique_ptr<Strategy> make_strategy(std::string_view name, const Graph& g) {
  if (name == "greedy") return std::make_unique<GreedyStrategy>();
  if (name == "connector") return std::make_unique<ConnectorStrategy>(g);
  if (name == "staller-block") return std::make_unique<StallerBlockStrategy>(g);
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

}  // namespace enclave
