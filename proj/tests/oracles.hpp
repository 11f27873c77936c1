#pragma once

// Slow reference implementations written straight from the definitions, on a
// plain adjacency matrix. They share no code with the library beyond reading
// the edge list of a Graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "enclave/graph.hpp"

namespace oracle {

struct Matrix {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  explicit Matrix(const enclave::Graph& g) : n(g.order()), adj(n, std::vector<bool>(n, false)) {
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  }
  bool closed(int u, int v) const { return u == v || adj[u][v]; }
};

inline bool in(std::uint64_t s, int v) { return (s >> v) & 1U; }
inline int size(std::uint64_t s) {
  int c = 0;
  for (; s != 0; s &= s - 1) ++c;
  return c;
}

inline bool dominating(const Matrix& m, std::uint64_t d) {
  for (int w = 0; w < m.n; ++w) {
    bool hit = false;
    for (int v = 0; v < m.n; ++v) hit = hit || (in(d, v) && m.closed(v, w));
    if (!hit) return false;
  }
  return true;
}

// Minimal: removing any single member breaks domination.
inline bool minimal_dominating(const Matrix& m, std::uint64_t d) {
  if (!dominating(m, d)) return false;
  for (int v = 0; v < m.n; ++v) {
    if (in(d, v) && dominating(m, d & ~(std::uint64_t{1} << v))) return false;
  }
  return true;
}

inline bool enclaveless(const Matrix& m, std::uint64_t s) {
  for (int v = 0; v < m.n; ++v) {
    if (!in(s, v)) continue;
    bool inside = true;
    for (int w = 0; w < m.n; ++w) inside = inside && (!m.closed(v, w) || in(s, w));
    if (inside) return false;
  }
  return true;
}

inline bool maximal_enclaveless(const Matrix& m, std::uint64_t s) {
  if (!enclaveless(m, s)) return false;
  for (int v = 0; v < m.n; ++v) {
    if (!in(s, v) && enclaveless(m, s | (std::uint64_t{1} << v))) return false;
  }
  return true;
}

inline bool independent(const Matrix& m, std::uint64_t s) {
  for (int u = 0; u < m.n; ++u) {
    for (int v = u + 1; v < m.n; ++v) {
      if (in(s, u) && in(s, v) && m.adj[u][v]) return false;
    }
  }
  return true;
}

// Every member has a private neighbor w: N[w] meets s only in that member.
inline bool irredundant(const Matrix& m, std::uint64_t s) {
  for (int v = 0; v < m.n; ++v) {
    if (!in(s, v)) continue;
    bool has_private = false;
    for (int w = 0; w < m.n && !has_private; ++w) {
      if (!m.closed(v, w)) continue;
      bool only = true;
      for (int u = 0; u < m.n; ++u) only = only && (u == v || !in(s, u) || !m.closed(u, w));
      has_private = only;
    }
    if (!has_private) return false;
  }
  return true;
}

struct Numbers {
  int gamma, Gamma, psi, Psi, alpha, IR;
  bool well_dominated;
};

inline Numbers numbers(const enclave::Graph& g) {
  const Matrix m(g);
  Numbers r{m.n + 1, -1, m.n + 1, -1, -1, -1, true};
  int minimal_size = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.n); ++s) {
    const int k = size(s);
    if (dominating(m, s)) r.gamma = std::min(r.gamma, k);
    if (minimal_dominating(m, s)) {
      r.Gamma = std::max(r.Gamma, k);
      if (minimal_size >= 0 && minimal_size != k) r.well_dominated = false;
      minimal_size = k;
    }
    if (enclaveless(m, s)) r.Psi = std::max(r.Psi, k);
    if (maximal_enclaveless(m, s)) r.psi = std::min(r.psi, k);
    if (independent(m, s)) r.alpha = std::max(r.alpha, k);
    if (irredundant(m, s)) r.IR = std::max(r.IR, k);
  }
  return r;
}

// Plain recursive minimax without memo. maximizer_to_move toggles each ply.
inline int enclaveless_game(const Matrix& m, std::uint64_t s, bool maximizer_to_move) {
  int best = -1;
  for (int v = 0; v < m.n; ++v) {
    if (in(s, v)) continue;
    const std::uint64_t next = s | (std::uint64_t{1} << v);
    if (!enclaveless(m, next)) continue;
    const int value = enclaveless_game(m, next, !maximizer_to_move);
    if (best < 0 || (maximizer_to_move ? value > best : value < best)) best = value;
  }
  return best < 0 ? size(s) : best;
}

inline int enclaveless_game(const enclave::Graph& g, bool maximizer_first) {
  return enclaveless_game(Matrix(g), 0, maximizer_first);
}

// Domination game: a move must dominate a new vertex. Staller maximizes.
inline int domination_game(const Matrix& m, std::uint64_t played, bool staller_to_move) {
  auto covered = [&](std::uint64_t p) {
    std::uint64_t c = 0;
    for (int v = 0; v < m.n; ++v) {
      if (!in(p, v)) continue;
      for (int w = 0; w < m.n; ++w) {
        if (m.closed(v, w)) c |= std::uint64_t{1} << w;
      }
    }
    return c;
  };
  const std::uint64_t c = covered(played);
  int best = -1;
  for (int v = 0; v < m.n; ++v) {
    if (in(played, v)) continue;
    const std::uint64_t next = played | (std::uint64_t{1} << v);
    if (covered(next) == c) continue;
    const int value = domination_game(m, next, !staller_to_move);
    if (best < 0 || (staller_to_move ? value > best : value < best)) best = value;
  }
  return best < 0 ? size(played) : best;
}

inline int domination_game(const enclave::Graph& g, bool staller_first) {
  return domination_game(Matrix(g), 0, staller_first);
}

// Induced K_{1,s} by trying every center and every s-subset of vertices.
inline bool has_induced_star(const enclave::Graph& g, int s) {
  const Matrix m(g);
  for (int c = 0; c < m.n; ++c) {
    for (std::uint64_t leaves = 0; leaves < (std::uint64_t{1} << m.n); ++leaves) {
      if (size(leaves) != s || in(leaves, c)) continue;
      bool ok = true;
      for (int v = 0; v < m.n; ++v) ok = ok && (!in(leaves, v) || m.adj[c][v]);
      if (ok && independent(m, leaves)) return true;
    }
  }
  return false;
}

inline enclave::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<enclave::Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return enclave::Graph(n, edges);
}

inline bool isomorphic_by_permutation(const enclave::Graph& a, const enclave::Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const Matrix ma(a);
  const Matrix mb(b);
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool same = true;
    for (int u = 0; u < a.order() && same; ++u) {
      for (int v = 0; v < a.order() && same; ++v) {
        same = ma.adj[u][v] == mb.adj[perm[u]][perm[v]];
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
