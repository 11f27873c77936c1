#include "enclave/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "enclave/errors.hpp"

namespace enclave {

Graph basic(BasicKind kind, int n) {
  std::vector<Edge> edges;
  switch (kind) {
    case BasicKind::path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(n, edges);
    case BasicKind::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      return Graph(n, edges);
    case BasicKind::star:
      if (n < 1) throw std::invalid_argument("star needs at least one leaf");
      for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
      return Graph(n + 1, edges);
    case BasicKind::complete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      return Graph(n, edges);
  }
  throw std::invalid_argument("unknown basic family");
}

Graph double_star(int k) {
  if (k < 1) throw std::invalid_argument("double star needs k >= 1");
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(0, 2 + i);
    edges.emplace_back(1, 2 + k + i);
  }
  return Graph(2 * k + 2, edges);
}

Graph corona_path(int n) {
  if (n < 1) throw std::invalid_argument("corona path needs n >= 1");
  if (2 * n > kMaxOrder) throw cap_exceeded("corona of P_" + std::to_string(n) + " is too large");
  return corona(path(n));
}

std::vector<VertexSet> corona_path_blocks(int n) {
  std::vector<VertexSet> blocks;
  if (n < 10 || n % 10 != 0) return blocks;
  for (int k = 0; k < n / 10; ++k) {
    VertexSet b;
    for (int i = 0; i < 10; ++i) b = b.with(10 * k + i).with(n + 10 * k + i);
    blocks.push_back(b);
  }
  return blocks;
}

Graph connector_ring(int m, int r) {
  if (m < 2) throw std::invalid_argument("connector ring needs m >= 2");
  if (r < 3) throw std::invalid_argument("connector ring needs r >= 3");
  const int size = r + 1;
  if (m * size > kMaxOrder) {
    throw cap_exceeded("connector ring of order " + std::to_string(m * size) + " is too large");
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels(static_cast<std::size_t>(m * size));
  for (int i = 0; i < m; ++i) {
    const int base = i * size;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        if (a == 0 && b == 1) continue;  // x_i y_i removed
        edges.emplace_back(base + a, base + b);
      }
    }
    const int next_x = ((i + 1) % m) * size;
    edges.emplace_back(base + 1, next_x);
    const std::string block = std::to_string(i + 1);
    labels[static_cast<std::size_t>(base)] = "x" + block;
    labels[static_cast<std::size_t>(base + 1)] = "y" + block;
    for (int j = 2; j < size; ++j) {
      labels[static_cast<std::size_t>(base + j)] = "h" + block + "." + std::to_string(j - 1);
    }
  }
  Graph g = Graph(m * size, edges).with_labels(std::move(labels));
  DegreeProfile p = degree_profile(g);
  if (!p.regular || p.k != r) throw std::logic_error("connector ring is not regular");
  return g;
}

std::string partition_problem(const PartitionedGraph& pg) {
  const Graph& g = pg.graph;
  const int n = g.order();
  if ((pg.A | pg.B) != g.vertices() || pg.A.intersects(pg.B)) return "A and B do not partition V";
  if (n % 2 == 0) return "order is even";
  if (pg.A.size() != (n - 1) / 2) return "|A| != (n-1)/2";
  if (pg.B.size() != (n + 1) / 2) return "|B| != (n+1)/2";
  for (int v : pg.B) {
    if (g.raw_neighbors(v).intersects(pg.B)) return "B is not independent";
  }
  for (int v : pg.A) {
    if ((g.raw_neighbors(v) & pg.B).size() != 2) {
      return "vertex " + std::to_string(v) + " of A does not have exactly two neighbors in B";
    }
  }
  return {};
}

namespace {

struct Piece {
  Graph line;
  int offset = 0;
  std::vector<int> pendant_of;  // tree vertex -> line-graph vertex of its pendant edge
  std::vector<std::string> labels;
  VertexSet pendants;
};

Piece corona_line_piece(const Graph& tree, int index) {
  const int t = tree.order();
  Graph cor = corona(tree);
  LineGraph lg = line_graph(cor);
  Piece piece;
  piece.line = lg.graph;
  piece.pendant_of.assign(static_cast<std::size_t>(t), -1);
  const std::string prefix = std::to_string(index) + ":";
  for (std::size_t e = 0; e < lg.edge_of.size(); ++e) {
    auto [u, v] = lg.edge_of[e];
    if (v >= t) {
      piece.pendant_of[static_cast<std::size_t>(u)] = static_cast<int>(e);
      piece.pendants = piece.pendants.with(static_cast<int>(e));
      piece.labels.push_back("p" + prefix + std::to_string(u));
    } else {
      piece.labels.push_back("t" + prefix + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return piece;
}

}  // namespace

PartitionedGraph build_family_f(const FamilyFSpec& spec) {
  const int q = static_cast<int>(spec.trees.size());
  if (q < 1) throw std::invalid_argument("family F needs at least one tree");
  if (static_cast<int>(spec.glue.size()) != q - 1) {
    throw std::invalid_argument("family F with " + std::to_string(q) + " trees needs " +
                                std::to_string(q - 1) + " glue pairs, got " +
                                std::to_string(spec.glue.size()));
  }

  std::vector<Piece> pieces;
  int total = 0;
  for (int i = 0; i < q; ++i) {
    const auto& edges = spec.trees[static_cast<std::size_t>(i)];
    if (edges.empty()) throw std::invalid_argument("tree " + std::to_string(i) + " is trivial");
    const int t = static_cast<int>(edges.size()) + 1;
    if (2 * t - 1 > kMaxOrder) throw cap_exceeded("tree " + std::to_string(i) + " is too large");
    Graph tree(t, edges);
    if (!is_tree(tree)) throw std::invalid_argument("tree " + std::to_string(i) + " is not a tree");
    pieces.push_back(corona_line_piece(tree, i));
    pieces.back().offset = total;
    total += pieces.back().line.order();
  }
  if (total - (q - 1) > kMaxOrder) {
    throw cap_exceeded("family F member of order " + std::to_string(total - (q - 1)) +
                       " exceeds " + std::to_string(kMaxOrder));
  }

  // Resolve glue ends to ids in the disjoint union.
  auto resolve = [&](const GlueEnd& end) {
    if (end.tree < 0 || end.tree >= q) {
      throw std::invalid_argument("glue names tree " + std::to_string(end.tree) + " of " +
                                  std::to_string(q));
    }
    const Piece& piece = pieces[static_cast<std::size_t>(end.tree)];
    if (end.vertex < 0 || end.vertex >= static_cast<int>(piece.pendant_of.size())) {
      throw std::invalid_argument("glue vertex " + std::to_string(end.tree) + ":" +
                                  std::to_string(end.vertex) + " is not a pendant edge");
    }
    const int local = piece.pendant_of[static_cast<std::size_t>(end.vertex)];
    if (!is_simplicial(piece.line, local)) {
      throw std::invalid_argument("glue vertex " + std::to_string(end.tree) + ":" +
                                  std::to_string(end.vertex) + " is not simplicial");
    }
    return piece.offset + local;
  };

  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<GlueEnd> used;
  for (const GluePair& pair : spec.glue) {
    if (pair.first.tree == pair.second.tree) {
      throw std::invalid_argument("glue pair joins tree " + std::to_string(pair.first.tree) +
                                  " to itself");
    }
    for (const GlueEnd& end : {pair.first, pair.second}) {
      if (std::find(used.begin(), used.end(), end) != used.end()) {
        throw std::invalid_argument("glue vertex " + std::to_string(end.tree) + ":" +
                                    std::to_string(end.vertex) + " used twice");
      }
      used.push_back(end);
    }
    const int a = resolve(pair.first);
    const int b = resolve(pair.second);
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

  // New ids in order of first appearance of each representative.
  std::vector<int> new_id(static_cast<std::size_t>(total), -1);
  int n = 0;
  for (int v = 0; v < total; ++v) {
    const int root = parent[static_cast<std::size_t>(v)];
    new_id[static_cast<std::size_t>(v)] = root == v ? n++ : new_id[static_cast<std::size_t>(root)];
  }

  std::vector<std::vector<std::string>> sources(static_cast<std::size_t>(n));
  std::vector<bool> from_pendant(static_cast<std::size_t>(n), false);
  std::vector<Edge> edges;
  for (const Piece& piece : pieces) {
    for (int local = 0; local < piece.line.order(); ++local) {
      const int id = new_id[static_cast<std::size_t>(piece.offset + local)];
      sources[static_cast<std::size_t>(id)].push_back(piece.labels[static_cast<std::size_t>(local)]);
      if (piece.pendants.contains(local)) from_pendant[static_cast<std::size_t>(id)] = true;
      for (int w : piece.line.raw_neighbors(local)) {
        const int other = new_id[static_cast<std::size_t>(piece.offset + w)];
        if (other == id) throw std::invalid_argument("glue pair members are adjacent");
        if (local < w) edges.emplace_back(std::min(id, other), std::max(id, other));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("contraction creates parallel edges");
  }

  std::vector<std::string> labels;
  for (const auto& names : sources) {
    if (names.size() == 1) {
      labels.push_back(names.front());
      continue;
    }
    std::string merged = "c";
    for (std::size_t i = 0; i < names.size(); ++i) merged += (i ? "|" : "") + names[i].substr(1);
    labels.push_back(merged);
  }

  PartitionedGraph out{Graph(n, edges).with_labels(labels), {}, {}};
  for (int v = 0; v < n; ++v) {
    if (from_pendant[static_cast<std::size_t>(v)]) {
      out.B = out.B.with(v);
    } else {
      out.A = out.A.with(v);
    }
  }
  if (std::string problem = partition_problem(out); !problem.empty()) {
    throw std::invalid_argument("family F partition: " + problem);
  }
  if (!is_tree(clique_graph(out.graph))) {
    throw std::invalid_argument("clique graph of the contracted graph is not a tree");
  }
  return out;
}

namespace {

int parse_int(std::string_view text, int line) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw parse_error("expected an integer, got '" + std::string(text) + "'", line);
  }
  return value;
}

GlueEnd parse_glue_end(std::string_view token, int line) {
  auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw parse_error("glue end must be tree:vertex, got '" + std::string(token) + "'", line);
  }
  return GlueEnd{parse_int(token.substr(0, colon), line), parse_int(token.substr(colon + 1), line)};
}

}  // namespace

FamilyFSpec parse_family_spec(std::string_view text) {
  FamilyFSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "tree") {
      std::vector<Edge> edges;
      std::string token;
      while (words >> token) {
        auto dash = token.find('-');
        if (dash == std::string::npos) {
          throw parse_error("tree edge must be u-v, got '" + token + "'", line);
        }
        edges.emplace_back(parse_int(std::string_view(token).substr(0, dash), line),
                           parse_int(std::string_view(token).substr(dash + 1), line));
      }
      if (edges.empty()) throw parse_error("tree line without edges", line);
      spec.trees.push_back(std::move(edges));
    } else if (keyword == "glue") {
      std::string rest;
      std::getline(words, rest);
      for (char& c : rest) {
        if (c == '(' || c == ')' || c == ',') c = ' ';
      }
      std::istringstream ends(rest);
      std::string a;
      std::string b;
      std::string extra;
      if (!(ends >> a >> b) || (ends >> extra)) {
        throw parse_error("glue line must name exactly two ends", line);
      }
      spec.glue.push_back(GluePair{parse_glue_end(a, line), parse_glue_end(b, line)});
    } else {
      throw parse_error("unknown keyword '" + keyword + "'", line);
    }
  }
  return spec;
}

std::string format_family_spec(const FamilyFSpec& spec) {
  std::ostringstream out;
  for (const auto& tree : spec.trees) {
    out << "tree";
    for (auto [u, v] : tree) out << ' ' << u << '-' << v;
    out << '\n';
  }
  for (const GluePair& g : spec.glue) {
    out << "glue (" << g.first.tree << ':' << g.first.vertex << ", " << g.second.tree << ':'
        << g.second.vertex << ")\n";
  }
  return out.str();
}

Graph tree_from_prufer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  if (n > kMaxOrder) throw cap_exceeded("Pruefer sequence too long");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int v : seq) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("Pruefer entry " + std::to_string(v) + " outside 0.." +
                                  std::to_string(n - 1));
    }
    ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<Edge> edges;
  for (int v : seq) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(v)];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
        break;
      }
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> labeled_trees(int n) {
  if (n < 2) throw std::invalid_argument("labeled trees need n >= 2");
  if (n > kLabeledTreeCap) {
    throw cap_exceeded("labeled tree enumeration capped at n = " + std::to_string(kLabeledTreeCap));
  }
  std::vector<Graph> out;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    out.push_back(tree_from_prufer(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

std::vector<PartitionedGraph> family_f_members(int max_tree_order, int max_order) {
  std::vector<Graph> trees;
  for (int t = 2; t <= max_tree_order; ++t) {
    for (Graph& tree : labeled_trees(t)) trees.push_back(std::move(tree));
  }
  std::vector<PartitionedGraph> out;
  for (const Graph& tree : trees) {
    if (2 * tree.order() - 1 <= max_order) out.push_back(build_family_f({{tree.edges()}, {}}));
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i; j < trees.size(); ++j) {
      const int order = 2 * trees[i].order() - 1 + 2 * trees[j].order() - 1 - 1;
      if (order > max_order) continue;
      for (int u = 0; u < trees[i].order(); ++u) {
        for (int v = 0; v < trees[j].order(); ++v) {
          FamilyFSpec spec{{trees[i].edges(), trees[j].edges()}, {GluePair{{0, u}, {1, v}}}};
          out.push_back(build_family_f(spec));
        }
      }
    }
  }
  return out;
}

}  // namespace enclave
