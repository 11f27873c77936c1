#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "enclave/graph.hpp"

namespace enclave {

enum class BasicKind { path, cycle, star, complete };

/// path(n) = P_n and cycle(n) = C_n on consecutive ids; complete(n) = K_n;
/// star(n) = K_{1,n} with hub 0.
Graph basic(BasicKind kind, int n);
inline Graph path(int n) { return basic(BasicKind::path, n); }
inline Graph cycle(int n) { return basic(BasicKind::cycle, n); }
inline Graph star(int leaves) { return basic(BasicKind::star, leaves); }
inline Graph complete(int n) { return basic(BasicKind::complete, n); }

/// S(k,k): centers 0 and 1, leaves 2..k+1 on center 0 and k+2..2k+1 on 1.
Graph double_star(int k);

/// Corona of P_n. x_i has id i-1 and label "x<i>", its pendant y_i has id
/// n+i-1 and label "y<i>". Blocks of ten consecutive indices are addressed
/// through `corona_path_blocks`.
Graph corona_path(int n);

/// Blocks B_0..B_{q-1} of cor(P_{10q}); empty when 10 does not divide n.
std::vector<VertexSet> corona_path_blocks(int n);

/// Ring of m copies of K_{r+1} minus an edge x_i y_i, joined by y_i x_{i+1}
/// (indices mod m). Block i (1-based) occupies ids (i-1)(r+1) .. i(r+1)-1:
/// x_i first, then y_i, then hidden vertices "h<i>.<j>", j = 1..r-1.
Graph connector_ring(int m, int r);

/// A pendant edge of cor(T_tree), named by the tree vertex it hangs from.
struct GlueEnd {
  int tree = 0;
  int vertex = 0;
  bool operator==(const GlueEnd&) const = default;
};

struct GluePair {
  GlueEnd first;
  GlueEnd second;
};

/// Input to the family-F construction: q non-trivial trees and q-1 glue
/// pairs between pendant-edge vertices of their corona line graphs.
struct FamilyFSpec {
  std::vector<std::vector<Edge>> trees;  // tree vertices are 0..|edges|
  std::vector<GluePair> glue;
};

struct PartitionedGraph {
  Graph graph;
  /// Vertices coming from tree edges.
  VertexSet A;
  /// Vertices coming from pendant edges (each glue pair contributes one).
  VertexSet B;
};

/// Builds the line graph of each cor(T_i), contracts each glue pair into one
/// vertex and returns the result with its (A, B) partition. Validates the
/// spec and every partition property; throws std::invalid_argument.
PartitionedGraph build_family_f(const FamilyFSpec& spec);

/// Checks |A| = (n-1)/2, |B| = (n+1)/2, B independent and every vertex of A
/// with exactly two neighbors in B. Returns an empty string when all hold,
/// otherwise a description of the first failure.
std::string partition_problem(const PartitionedGraph& pg);

/// Plain-text family spec:
///
///     # comment
///     tree 0-1 1-2 1-3
///     tree 0-1
///     glue (0:2, 1:0)
///
/// One `tree` line per tree as whitespace-separated u-v edges, one `glue`
/// line per pair naming tree index and tree vertex of each pendant edge.
/// Throws parse_error with the line number.
FamilyFSpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilyFSpec& spec);

/// Labeled tree on seq.size()+2 vertices from its Pruefer sequence.
Graph tree_from_prufer(std::span<const int> seq);

inline constexpr int kLabeledTreeCap = 6;

/// All n^(n-2) labeled trees on n vertices, n <= 6, in Pruefer order.
std::vector<Graph> labeled_trees(int n);

/// Family-F members with q <= 2 built from labeled trees of order 2..max_tree_order
/// and total order <= max_order, one per choice of glue vertices.
std::vector<PartitionedGraph> family_f_members(int max_tree_order, int max_order);

}  // namespace enclave
