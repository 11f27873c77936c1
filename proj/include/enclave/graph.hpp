#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace enclave {

inline constexpr int kMaxOrder = 64;

/// Subset of vertex ids 0..63 stored as one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) bits_ |= bit(v);
  }

  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from(std::span<const int> members) {
    VertexSet s;
    for (int v : members) s.bits_ |= bit(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Lowest member, or -1 when empty.
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t bits_ = 0;
};

/// "{0,2,5}"
std::string to_string(VertexSet s);

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Labels are optional per-vertex tags set by generators (connectors, pendant
/// vertices, partition sides). They never take part in equality.
class Graph {
 public:
  /// K1.
  Graph() : Graph(1, {}) {}
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Open neighborhood N(v). Throws std::out_of_range for a bad id.
  VertexSet neighbors(int v) const { return adj_[checked(v)]; }
  /// N[v] = N(v) + v.
  VertexSet closed_neighborhood(int v) const { return adj_[checked(v)].with(v); }
  int degree(int v) const { return adj_[checked(v)].size(); }
  bool adjacent(int u, int v) const { return adj_[checked(u)].contains(checked(v)); }

  /// Unchecked access for hot loops; `v` must be in range.
  VertexSet raw_neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Empty string when unlabeled.
  const std::string& label(int v) const;
  std::optional<int> find_label(const std::string& text) const;
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  int checked(int v) const;

  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// Validating constructor: 1 <= n <= 64, endpoints in range, no loops.
/// Duplicate edges collapse.
Graph build_graph(int n, std::span<const Edge> edges);

inline VertexSet closed_neighborhood(const Graph& g, int v) { return g.closed_neighborhood(v); }

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
  /// Common degree when regular.
  std::optional<int> k;
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);
bool is_isolate_free(const Graph& g);
bool is_tree(const Graph& g);

/// Independent set of size `s` inside some open neighborhood (induced K_{1,s}).
bool has_induced_star(const Graph& g, int s);
inline bool is_claw_free(const Graph& g) { return !has_induced_star(g, 3); }

bool is_simplicial(const Graph& g, int v);
bool is_clique(const Graph& g, VertexSet s);

struct LineGraph {
  Graph graph;
  /// Underlying edge of each line-graph vertex.
  std::vector<Edge> edge_of;
};

/// Vertex i of the result is edge i of `g.edges()`. Throws on an edgeless graph.
LineGraph line_graph(const Graph& g);

inline constexpr std::size_t kDefaultCliqueCap = 100000;

/// Maximal cliques via Bron-Kerbosch with pivoting, in discovery order.
/// Throws cap_exceeded when more than `cap` cliques exist.
std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// Intersection graph of the maximal cliques, numbered by sorted clique mask.
Graph clique_graph(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// G plus one pendant neighbor per vertex. Vertex v keeps id v and is labeled
/// "x<v+1>"; its pendant is n+v, labeled "y<v+1>".
Graph corona(const Graph& g);

/// Hop count, nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

/// Vertices within `radius` hops of v (v included).
VertexSet ball(const Graph& g, int v, int radius);

/// Subgraph induced by `keep`, renumbered in increasing id order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

}  // namespace enclave
