#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "enclave/game.hpp"

namespace enclave {

/// Plays the lowest-id legal vertex.
class GreedyStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "greedy"; }
  StrategyChoice select(const Position& p, std::span<const int> history) const override;
  std::uint64_t memo_key(const Position&, std::span<const int>) const override { return 0; }
};

/// Maximizer's strategy on a connector ring: after the opponent moves in a
/// block, answer with a playable connector of that block, else a playable
/// hidden vertex there, else a playable connector anywhere, else the lowest
/// playable vertex.
///
/// Needs the labels written by `connector_ring`: "x<i>", "y<i>" for the
/// connectors of block i and "h<i>.<j>" for its hidden vertices.
class ConnectorStrategy final : public Strategy {
 public:
  explicit ConnectorStrategy(const Graph& g);

  std::string_view name() const override { return "connector"; }
  StrategyChoice select(const Position& p, std::span<const int> history) const override;
  std::uint64_t memo_key(const Position& p, std::span<const int> history) const override;

 private:
  std::vector<int> block_of_;
  std::vector<VertexSet> connectors_;
  std::vector<VertexSet> hidden_;
  VertexSet all_connectors_;
};

/// Staller's strategy for the Dominator-start domination game on the corona
/// of a path of order 10q, split into blocks of ten consecutive path indices.
///
/// When Dominator opens a block at local index 1..5 Staller takes the leaf
/// y at local index 8; at local index 6..10 the leaf at index 3. On
/// Dominator's second move inside a block Staller takes the support vertex of
/// the leaf she took there. Every other position falls back to the lowest-id
/// legal vertex and is reported as a fallback.
///
/// Needs the labels written by `corona_path`: "x<i>" and "y<i>", i = 1..n.
class StallerBlockStrategy final : public Strategy {
 public:
  explicit StallerBlockStrategy(const Graph& g);

  std::string_view name() const override { return "staller-block"; }
  StrategyChoice select(const Position& p, std::span<const int> history) const override;
  std::uint64_t memo_key(const Position& p, std::span<const int> history) const override;

 private:
  struct BlockState {
    bool open = true;
    int leaf_index = 0;  // local index 1..10 of Staller's opening leaf, 0 if none
    int dominator_moves = 0;
  };

  // Block states after replaying `history`, plus whether the last move opened
  // its block.
  std::vector<BlockState> replay(const Position& p, std::span<const int> history,
                                 bool& last_opened) const;

  int path_order_ = 0;
  std::vector<int> x_;  // x_[i] = id of x_{i+1}
  std::vector<int> y_;
  std::vector<int> index_of_;  // 1-based path index of each vertex
};

/// Names accepted by `make_strategy`.
std::vector<std::string> builtin_strategies();

/// Throws strategy_fault when the graph lacks the labels the strategy needs,
/// std::invalid_argument for an unknown name.
std::unique_ptr<Strategy> make_strategy(std::string_view name, const Graph& g);

}  // namespace enclave
