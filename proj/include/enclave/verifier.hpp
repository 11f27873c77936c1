#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enclave/game.hpp"
#include "enclave/graph.hpp"
#include "enclave/invariants.hpp"
#include "enclave/io.hpp"

namespace enclave {

/// Indexed graph source. Slots may be empty when a filter rejects them.
class Corpus {
 public:
  virtual ~Corpus() = default;
  virtual std::size_t size() const = 0;
  virtual std::optional<Graph> at(std::size_t i) const = 0;
};

inline constexpr int kExhaustiveCap = 7;

/// Every labeled graph on 2..n_max vertices, ordered by order then by the
/// edge mask over pairs (0,1), (0,2), (1,2), (0,3), ... Isomorphic copies
/// are all present.
class LabeledCorpus : public Corpus {
 public:
  LabeledCorpus(int n_max, bool connected_only);

  std::size_t size() const override { return size_; }
  std::optional<Graph> at(std::size_t i) const override;

  int n_max() const { return n_max_; }
  bool connected_only() const { return connected_only_; }

 private:
  int n_max_;
  bool connected_only_;
  std::vector<std::size_t> offsets_;  // first index of each order
  std::size_t size_ = 0;
};

/// Throws cap_exceeded for n_max > 7 and std::invalid_argument for n_max < 2.
LabeledCorpus exhaustive_corpus(int n_max, bool connected_only);

class ListCorpus : public Corpus {
 public:
  explicit ListCorpus(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  std::size_t size() const override { return graphs_.size(); }
  std::optional<Graph> at(std::size_t i) const override { return graphs_.at(i); }

 private:
  std::vector<Graph> graphs_;
};

/// Number of non-empty slots.
std::size_t member_count(const Corpus& corpus);

/// Everything a check may look at for one graph.
class CheckContext {
 public:
  CheckContext(const Graph& g, const InvariantReport& report, const GameValues& values);

  const Graph& graph() const { return *graph_; }
  const InvariantReport& report() const { return *report_; }
  const GameValues& values() const { return *values_; }
  int n() const { return report_->n; }
  const DegreeProfile& degrees() const { return degrees_; }
  bool connected() const { return connected_; }
  bool isolate_free() const { return degrees_.min_degree >= 1; }
  /// No induced K_{1,s}; cached per s.
  bool star_free(int s) const;
  bool claw_free() const { return star_free(3); }
  bool is_p3() const;

 private:
  const Graph* graph_;
  const InvariantReport* report_;
  const GameValues* values_;
  DegreeProfile degrees_;
  bool connected_;
  mutable std::vector<std::optional<bool>> star_free_;
};

struct Check {
  std::string name;
  std::string statement;
  /// Hypotheses under which the check is asserted.
  std::function<bool(const CheckContext&)> applies;
  /// Empty on success, otherwise the witnessing numbers.
  std::function<std::optional<std::string>(const CheckContext&)> violation;
  bool needs_domination_game = false;
};

using CheckCatalog = std::vector<Check>;

CheckCatalog default_catalog();
/// Keeps the named checks in catalog order. Throws std::invalid_argument on
/// an unknown name.
CheckCatalog select_checks(const CheckCatalog& catalog, std::span<const std::string> names);

struct SweepOptions {
  /// 0 uses the hardware concurrency.
  int threads = 0;
  BruteForceCaps caps;
  SolverOptions solver;
  bool domination_game = false;
  /// Keep passing records too (violations are always kept).
  bool keep_all_records = false;
};

/// Invariants, game values and check verdicts for one graph. Throws
/// cap_exceeded when the graph is beyond a cap.
SweepRecord evaluate_graph(const Graph& g, const CheckCatalog& catalog,
                           const SweepOptions& options = {});

/// Recomputes a record from its graph6 text and compares the stored values.
bool replays(const SweepRecord& record, const CheckCatalog& catalog,
             const SweepOptions& options = {});

struct SweepResult {
  std::vector<SweepRecord> records;  // by corpus index
  SweepSummary summary;
};

/// Runs the catalog on every corpus member with a pool of workers. Members
/// beyond a cap are skipped, counted and reported as warnings.
SweepResult run_checks(const Corpus& corpus, const CheckCatalog& catalog,
                       const SweepOptions& options = {});

/// One reproduced value next to its closed form or published value.
struct ReferenceRow {
  std::string group;
  std::string instance;
  std::string quantity;
  /// "=" or ">=".
  std::string relation;
  int expected = 0;
  int actual = 0;

  bool passed() const { return relation == ">=" ? actual >= expected : actual == expected; }
};

struct ReferenceOptions {
  /// Include the 20-vertex domination-game and Staller strategy rows.
  bool heavy = false;
  int path_max = 13;
};

std::vector<ReferenceRow> reference_table(const ReferenceOptions& options = {});
std::string format_reference_table(std::span<const ReferenceRow> rows);

}  // namespace enclave
