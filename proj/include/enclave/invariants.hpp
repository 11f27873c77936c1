#pragma once

#include <functional>
#include <vector>

#include "enclave/graph.hpp"

namespace enclave {

// Set predicates. Functions taking a vertex `v` that must belong to `s`
// throw std::invalid_argument otherwise.

/// v is an enclave of S when N[v] is contained in S.
bool is_enclave(const Graph& g, VertexSet s, int v);
bool is_enclaveless(const Graph& g, VertexSet s);
/// v outside S with S + v still enclaveless. Throws when S has an enclave.
bool is_playable(const Graph& g, VertexSet s, int v);
/// All playable vertices of an enclaveless S.
VertexSet playable_vertices(const Graph& g, VertexSet s);
bool is_maximal_enclaveless(const Graph& g, VertexSet s);

VertexSet dominated_by(const Graph& g, VertexSet d);
bool is_dominating(const Graph& g, VertexSet d);
bool is_minimal_dominating(const Graph& g, VertexSet d);

/// S-external private neighbors: w outside S with N(w) & S == {v}.
VertexSet epn(const Graph& g, int v, VertexSet s);
/// S-private neighbors: w with N[w] & S == {v}.
VertexSet pn(const Graph& g, int v, VertexSet s);

bool is_irredundant(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
/// Pairwise distance at least 3.
bool is_2_packing(const Graph& g, VertexSet s);

struct BruteForceCaps {
  int domination = 20;    // gamma, Gamma, psi, Psi, alpha, well-domination
  int irredundance = 18;  // IR
};

struct InvariantReport {
  int n = 0;
  int gamma = 0;  // minimum dominating set
  int Gamma = 0;  // maximum minimal dominating set
  int psi = 0;    // minimum maximal enclaveless set
  int Psi = 0;    // maximum enclaveless set
  int alpha = 0;
  int IR = 0;
  bool well_dominated = false;
  /// K1: the only maximal enclaveless set is empty, so psi = Psi = 0.
  bool degenerate = false;

  bool operator==(const InvariantReport&) const = default;
};

InvariantReport compute_invariants(const Graph& g, const BruteForceCaps& caps = {});

// Individual invariants, each an exhaustive search that throws cap_exceeded
// above the corresponding cap.
int domination_number(const Graph& g, const BruteForceCaps& caps = {});
int upper_domination_number(const Graph& g, const BruteForceCaps& caps = {});
int enclaveless_number(const Graph& g, const BruteForceCaps& caps = {});
int lower_enclaveless_number(const Graph& g, const BruteForceCaps& caps = {});
int independence_number(const Graph& g, const BruteForceCaps& caps = {});
int upper_irredundance_number(const Graph& g, const BruteForceCaps& caps = {});
bool is_well_dominated(const Graph& g, const BruteForceCaps& caps = {});

/// Calls `fn` for every k-subset of {0..n-1} in increasing mask order until
/// `fn` returns false. Returns false iff stopped early.
bool for_each_subset_of_size(int n, int k, const std::function<bool(VertexSet)>& fn);

// Complete, duplicate-free enumerations in increasing mask order.
std::vector<VertexSet> minimal_dominating_sets(const Graph& g, const BruteForceCaps& caps = {});
std::vector<VertexSet> maximal_enclaveless_sets(const Graph& g, const BruteForceCaps& caps = {});
std::vector<VertexSet> minimum_dominating_sets(const Graph& g, const BruteForceCaps& caps = {});
std::vector<VertexSet> maximum_independent_sets(const Graph& g, const BruteForceCaps& caps = {});
/// Irredundant sets of size IR(G).
std::vector<VertexSet> maximum_irredundant_sets(const Graph& g, const BruteForceCaps& caps = {});
/// Minimal dominating sets of size Gamma(G).
std::vector<VertexSet> upper_domination_sets(const Graph& g, const BruteForceCaps& caps = {});
/// Maximal enclaveless sets of size psi(G).
std::vector<VertexSet> lower_enclaveless_sets(const Graph& g, const BruteForceCaps& caps = {});

}  // namespace enclave
