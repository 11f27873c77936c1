#include "enclave/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "enclave/errors.hpp"

namespace enclave {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxOrder) {
    throw cap_exceeded("graph order " + std::to_string(n) + " outside supported range 1.." +
                       std::to_string(kMaxOrder));
  }
  adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] = adj_[static_cast<std::size_t>(u)].with(v);
    adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].with(u);
  }
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

int Graph::checked(int v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in 0.." +
                            std::to_string(order() - 1));
  }
  return v;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet a : adj_) twice += a.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::string& Graph::label(int v) const {
  static const std::string kEmpty;
  checked(v);
  return labels_.empty() ? kEmpty : labels_[static_cast<std::size_t>(v)];
}

std::optional<int> Graph::find_label(const std::string& text) const {
  auto it = std::find(labels_.begin(), labels_.end(), text);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != adj_.size()) {
    throw std::invalid_argument("label count does not match graph order");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.min_degree = kMaxOrder;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.raw_neighbors(v).size();
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
  }
  p.regular = p.min_degree == p.max_degree;
  if (p.regular) p.k = p.min_degree;
  return p;
}

bool is_connected(const Graph& g) {
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.raw_neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertices();
}

bool is_isolate_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.raw_neighbors(v).empty()) return false;
  }
  return true;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.order() - 1; }

namespace {

// Is there an independent subset of `candidates` with at least `need` vertices?
bool has_independent_subset(const Graph& g, VertexSet candidates, int need) {
  if (need <= 0) return true;
  if (candidates.size() < need) return false;
  int v = candidates.first();
  VertexSet rest = candidates.without(v);
  return has_independent_subset(g, rest - g.raw_neighbors(v), need - 1) ||
         has_independent_subset(g, rest, need);
}

}  // namespace

bool has_induced_star(const Graph& g, int s) {
  if (s < 2) throw std::invalid_argument("star size must be at least 2");
  for (int v = 0; v < g.order(); ++v) {
    if (has_independent_subset(g, g.raw_neighbors(v), s)) return true;
  }
  return false;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s.without(v)).subset_of(g.raw_neighbors(v))) return false;
  }
  return true;
}

bool is_simplicial(const Graph& g, int v) { return is_clique(g, g.neighbors(v)); }

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edges();
  if (out.edge_of.empty()) throw std::invalid_argument("line graph of an edgeless graph");
  const int m = static_cast<int>(out.edge_of.size());
  if (m > kMaxOrder) throw cap_exceeded("line graph would have " + std::to_string(m) + " vertices");
  std::vector<Edge> adjacency;
  for (int i = 0; i < m; ++i) {
    auto [a, b] = out.edge_of[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      auto [c, d] = out.edge_of[static_cast<std::size_t>(j)];
      if (a == c || a == d || b == c || b == d) adjacency.emplace_back(i, j);
    }
  }
  out.graph = Graph(m, adjacency);
  return out;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  std::size_t cap;
  std::vector<VertexSet> found;

  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      if (found.size() >= cap) {
        throw cap_exceeded("more than " + std::to_string(cap) + " maximal cliques");
      }
      found.push_back(r);
      return;
    }
    // Pivot on the vertex of P u X with the most neighbors in P.
    int pivot = -1;
    int best = -1;
    for (int u : p | x) {
      int c = (p & g.raw_neighbors(u)).size();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (int v : p - g.raw_neighbors(pivot)) {
      VertexSet nv = g.raw_neighbors(v);
      expand(r.with(v), p & nv, x & nv);
      p = p.without(v);
      x = x.with(v);
    }
  }
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap) {
  CliqueSearch search{g, cap, {}};
  search.expand(VertexSet{}, g.vertices(), VertexSet{});
  return search.found;
}

Graph clique_graph(const Graph& g, std::size_t cap) {
  std::vector<VertexSet> cliques = maximal_cliques(g, cap);
  std::sort(cliques.begin(), cliques.end());
  const int k = static_cast<int>(cliques.size());
  if (k > kMaxOrder) throw cap_exceeded("clique graph would have " + std::to_string(k) + " vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (cliques[static_cast<std::size_t>(i)].intersects(cliques[static_cast<std::size_t>(j)])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph(k, edges);
}

Graph corona(const Graph& g) {
  const int n = g.order();
  if (2 * n > kMaxOrder) {
    throw cap_exceeded("corona of a graph of order " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxOrder) + " vertices");
  }
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> labels(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, n + v);
    labels[static_cast<std::size_t>(v)] = "x" + std::to_string(v + 1);
    labels[static_cast<std::size_t>(n + v)] = "y" + std::to_string(v + 1);
  }
  return Graph(2 * n, edges).with_labels(std::move(labels));
}

std::optional<int> distance(const Graph& g, int u, int v) {
  g.neighbors(u);
  g.neighbors(v);
  VertexSet seen = VertexSet::single(u);
  VertexSet frontier = seen;
  for (int hops = 0; !frontier.empty(); ++hops) {
    if (frontier.contains(v)) return hops;
    VertexSet next;
    for (int w : frontier) next |= g.raw_neighbors(w);
    frontier = next - seen;
    seen |= next;
  }
  return std::nullopt;
}

VertexSet ball(const Graph& g, int v, int radius) {
  VertexSet seen = VertexSet::single(v);
  for (int r = 0; r < radius; ++r) {
    VertexSet next = seen;
    for (int w : seen) next |= g.raw_neighbors(w);
    if (next == seen) break;
    seen = next;
  }
  return seen;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> ids = keep.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) index[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) {
      edges.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    }
  }
  return Graph(static_cast<int>(ids.size()), edges);
}

}  // namespace enclave
