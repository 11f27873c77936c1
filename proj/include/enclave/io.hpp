#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enclave/graph.hpp"
#include "enclave/invariants.hpp"

namespace enclave {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1), (0,2), (1,2), (0,3), ... packed six bits per byte,
// each byte offset by 63, zero padded.

/// Parses one graph6 token. A leading ">>graph6<<" header and trailing
/// whitespace are accepted. Throws parse_error for malformed input and
/// cap_exceeded when the encoded order exceeds 64.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Newline-separated graph6 tokens; blank lines skipped. Errors carry the
/// line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// "n <count>" on the first content line, then one "u v" pair per line.
/// '#' starts a comment. Throws parse_error with the line number.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

struct GameValues {
  int psg_plus = 0;   // Maximizer starts
  int psg_minus = 0;  // Minimizer starts
  std::optional<int> gg;   // Dominator starts
  std::optional<int> ggp;  // Staller starts
  bool operator==(const GameValues&) const = default;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Witnessing numbers; always filled for failures.
  std::string detail;
};

struct SweepRecord {
  std::size_t index = 0;  // position in the corpus
  std::string graph6;
  InvariantReport report;
  GameValues values;
  std::vector<CheckResult> checks;

  bool violated() const;
};

struct CheckTally {
  std::string name;
  std::size_t applied = 0;
  std::size_t failed = 0;
};

struct SweepSummary {
  std::size_t graphs_checked = 0;
  std::size_t graphs_skipped = 0;
  std::size_t violations = 0;  // failed check results
  std::vector<CheckTally> per_check;
  std::vector<std::string> warnings;
};

enum class ReportFormat { table, records };

/// Table: aligned per-graph rows then a summary block. Records: one JSON
/// object per line with fields graph6, n, gamma, Gamma, psi, Psi, alpha, IR,
/// psg_plus, psg_minus, gg, ggp, checks, then a final {"summary": ...} line.
void emit_report(std::ostream& out, const std::vector<SweepRecord>& records,
                 const SweepSummary& summary, ReportFormat format);
std::string emit_report(const std::vector<SweepRecord>& records, const SweepSummary& summary,
                        ReportFormat format);

/// Inverse of the records format for one line (used to replay violations).
SweepRecord parse_record_line(std::string_view line);

}  // namespace enclave
