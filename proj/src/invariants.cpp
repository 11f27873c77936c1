#include "enclave/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "enclave/errors.hpp"

namespace enclave {

namespace {

void require_member(VertexSet s, int v) {
  if (!s.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not in " + to_string(s));
  }
}

void require_order(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw cap_exceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                       " exceeds brute-force cap " + std::to_string(cap));
  }
}

VertexSet closed(const Graph& g, int v) { return g.raw_neighbors(v).with(v); }

// Vertices lying in N[u] for at least two members u of s.
VertexSet covered_twice(const Graph& g, VertexSet s) {
  VertexSet once;
  VertexSet twice;
  for (int v : s) {
    VertexSet nv = closed(g, v);
    twice |= once & nv;
    once |= nv;
  }
  return twice;
}

bool enclaveless_fast(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.raw_neighbors(v).subset_of(s)) return false;
  }
  return true;
}

// Playable vertices of an enclaveless s.
VertexSet playable_fast(const Graph& g, VertexSet s) {
  VertexSet forbidden;
  for (int u : s) {
    VertexSet missing = closed(g, u) - s;
    if (missing.size() == 1) forbidden |= missing;
  }
  VertexSet out;
  for (int v : g.vertices() - s - forbidden) {
    if (!g.raw_neighbors(v).subset_of(s)) out = out.with(v);
  }
  return out;
}

VertexSet dominated_fast(const Graph& g, VertexSet d) {
  VertexSet out;
  for (int v : d) out |= closed(g, v);
  return out;
}

// Every member keeps a private neighbor.
bool irredundant_fast(const Graph& g, VertexSet s) {
  VertexSet twice = covered_twice(g, s);
  for (int v : s) {
    if (closed(g, v).subset_of(twice)) return false;
  }
  return true;
}

bool minimal_dominating_fast(const Graph& g, VertexSet d) {
  return dominated_fast(g, d) == g.vertices() && irredundant_fast(g, d);
}

bool maximal_enclaveless_fast(const Graph& g, VertexSet s) {
  return enclaveless_fast(g, s) && playable_fast(g, s).empty();
}

bool independent_fast(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.raw_neighbors(v).intersects(s)) return false;
  }
  return true;
}

// Gosper's hack over k-subsets of {0..n-1}; stops when fn returns false.
template <typename Fn>
bool visit_k_subsets(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  if (k == 0) return fn(VertexSet{});
  const std::uint64_t limit_bit = n >= 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t s = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (!fn(VertexSet(s))) return false;
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    if (r == 0) return true;  // wrapped past bit 63
    s = (((r ^ s) >> 2) / c) | r;
    if (limit_bit != 0 && s >= limit_bit) return true;
  }
}

// Smallest k with a k-subset satisfying pred.
template <typename Pred>
int min_witness_size(const Graph& g, Pred&& pred) {
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    bool found = !visit_k_subsets(n, k, [&](VertexSet s) { return !pred(s); });
    if (found) return k;
  }
  return -1;
}

template <typename Pred>
int max_witness_size(const Graph& g, Pred&& pred) {
  const int n = g.order();
  for (int k = n; k >= 0; --k) {
    bool found = !visit_k_subsets(n, k, [&](VertexSet s) { return !pred(s); });
    if (found) return k;
  }
  return -1;
}

template <typename Pred>
std::vector<VertexSet> all_subsets_where(const Graph& g, Pred&& pred) {
  std::vector<VertexSet> out;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (pred(VertexSet(bits))) out.emplace_back(bits);
  }
  return out;
}

template <typename Pred>
std::vector<VertexSet> k_subsets_where(const Graph& g, int k, Pred&& pred) {
  std::vector<VertexSet> out;
  visit_k_subsets(g.order(), k, [&](VertexSet s) {
    if (pred(s)) out.push_back(s);
    return true;
  });
  return out;
}

// Depth-first walk over irredundant sets, extending in increasing id order.
// Irredundance is hereditary, so every irredundant set is reached once.
template <typename Visit>
void walk_irredundant(const Graph& g, VertexSet s, int next, Visit& visit) {
  visit(s);
  for (int v = next; v < g.order(); ++v) {
    VertexSet t = s.with(v);
    if (irredundant_fast(g, t)) walk_irredundant(g, t, v + 1, visit);
  }
}

}  // namespace

bool is_enclave(const Graph& g, VertexSet s, int v) {
  require_member(s, v);
  return g.closed_neighborhood(v).subset_of(s);
}

bool is_enclaveless(const Graph& g, VertexSet s) { return enclaveless_fast(g, s); }

bool is_playable(const Graph& g, VertexSet s, int v) {
  if (!enclaveless_fast(g, s)) {
    throw std::invalid_argument("set " + to_string(s) + " is not enclaveless");
  }
  g.neighbors(v);
  return !s.contains(v) && enclaveless_fast(g, s.with(v));
}

VertexSet playable_vertices(const Graph& g, VertexSet s) {
  if (!enclaveless_fast(g, s)) {
    throw std::invalid_argument("set " + to_string(s) + " is not enclaveless");
  }
  return playable_fast(g, s);
}

bool is_maximal_enclaveless(const Graph& g, VertexSet s) { return maximal_enclaveless_fast(g, s); }

VertexSet dominated_by(const Graph& g, VertexSet d) { return dominated_fast(g, d); }

bool is_dominating(const Graph& g, VertexSet d) { return dominated_fast(g, d) == g.vertices(); }

bool is_minimal_dominating(const Graph& g, VertexSet d) { return minimal_dominating_fast(g, d); }

VertexSet epn(const Graph& g, int v, VertexSet s) {
  require_member(s, v);
  VertexSet out;
  for (int w : g.neighbors(v) - s) {
    if ((g.raw_neighbors(w) & s) == VertexSet::single(v)) out = out.with(w);
  }
  return out;
}

VertexSet pn(const Graph& g, int v, VertexSet s) {
  require_member(s, v);
  VertexSet out;
  for (int w : g.closed_neighborhood(v)) {
    if ((closed(g, w) & s) == VertexSet::single(v)) out = out.with(w);
  }
  return out;
}

bool is_irredundant(const Graph& g, VertexSet s) { return irredundant_fast(g, s); }

bool is_independent(const Graph& g, VertexSet s) { return independent_fast(g, s); }

bool is_2_packing(const Graph& g, VertexSet s) {
  for (int u : s) {
    for (int v : s) {
      if (u < v && closed(g, u).intersects(closed(g, v))) return false;
    }
  }
  return true;
}

bool for_each_subset_of_size(int n, int k, const std::function<bool(VertexSet)>& fn) {
  return visit_k_subsets(n, k, fn);
}

int domination_number(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "domination number");
  const VertexSet all = g.vertices();
  return min_witness_size(g, [&](VertexSet s) { return dominated_fast(g, s) == all; });
}

int upper_domination_number(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "upper domination number");
  return max_witness_size(g, [&](VertexSet s) { return minimal_dominating_fast(g, s); });
}

int enclaveless_number(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "enclaveless number");
  return max_witness_size(g, [&](VertexSet s) { return enclaveless_fast(g, s); });
}

int lower_enclaveless_number(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "lower enclaveless number");
  return min_witness_size(g, [&](VertexSet s) { return maximal_enclaveless_fast(g, s); });
}

int independence_number(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "independence number");
  return max_witness_size(g, [&](VertexSet s) { return independent_fast(g, s); });
}

int upper_irredundance_number(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.irredundance, "upper irredundance number");
  int best = 0;
  auto visit = [&](VertexSet s) { best = std::max(best, s.size()); };
  walk_irredundant(g, VertexSet{}, 0, visit);
  return best;
}

bool is_well_dominated(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "well-domination");
  int size = -1;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    VertexSet d(bits);
    if (!minimal_dominating_fast(g, d)) continue;
    if (size < 0) {
      size = d.size();
    } else if (d.size() != size) {
      return false;
    }
  }
  return true;
}

InvariantReport compute_invariants(const Graph& g, const BruteForceCaps& caps) {
  InvariantReport r;
  r.n = g.order();
  r.gamma = domination_number(g, caps);
  r.Gamma = upper_domination_number(g, caps);
  r.psi = lower_enclaveless_number(g, caps);
  r.Psi = enclaveless_number(g, caps);
  r.alpha = independence_number(g, caps);
  r.IR = upper_irredundance_number(g, caps);
  r.well_dominated = is_well_dominated(g, caps);
  r.degenerate = g.order() == 1;
  return r;
}

std::vector<VertexSet> minimal_dominating_sets(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "minimal dominating enumeration");
  return all_subsets_where(g, [&](VertexSet s) { return minimal_dominating_fast(g, s); });
}

std::vector<VertexSet> maximal_enclaveless_sets(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.domination, "maximal enclaveless enumeration");
  return all_subsets_where(g, [&](VertexSet s) { return maximal_enclaveless_fast(g, s); });
}

std::vector<VertexSet> minimum_dominating_sets(const Graph& g, const BruteForceCaps& caps) {
  const VertexSet all = g.vertices();
  return k_subsets_where(g, domination_number(g, caps),
                         [&](VertexSet s) { return dominated_fast(g, s) == all; });
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g, const BruteForceCaps& caps) {
  return k_subsets_where(g, independence_number(g, caps),
                         [&](VertexSet s) { return independent_fast(g, s); });
}

std::vector<VertexSet> maximum_irredundant_sets(const Graph& g, const BruteForceCaps& caps) {
  require_order(g, caps.irredundance, "irredundant enumeration");
  std::vector<VertexSet> best;
  int best_size = -1;
  auto visit = [&](VertexSet s) {
    if (s.size() > best_size) {
      best_size = s.size();
      best.clear();
    }
    if (s.size() == best_size) best.push_back(s);
  };
  walk_irredundant(g, VertexSet{}, 0, visit);
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<VertexSet> upper_domination_sets(const Graph& g, const BruteForceCaps& caps) {
  return k_subsets_where(g, upper_domination_number(g, caps),
                         [&](VertexSet s) { return minimal_dominating_fast(g, s); });
}

std::vector<VertexSet> lower_enclaveless_sets(const Graph& g, const BruteForceCaps& caps) {
  return k_subsets_where(g, lower_enclaveless_number(g, caps),
                         [&](VertexSet s) { return maximal_enclaveless_fast(g, s); });
}

}  // namespace enclave
