#include "doctest.h"

#include <random>

#include "enclave/errors.hpp"
#include "enclave/families.hpp"
#include "enclave/graph.hpp"
#include "oracles.hpp"

using namespace enclave;

TEST_CASE("vertex set basics") {
  VertexSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(64));
  CHECK(s.first() == 0);
  CHECK(VertexSet{}.first() == -1);
  CHECK(to_string(s) == "{0,2,5}");
  CHECK(to_string(VertexSet{}) == "{}");
  CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
  CHECK((s - VertexSet{2}) == VertexSet{0, 5});
  CHECK((s & VertexSet{2, 3}) == VertexSet{2});
  CHECK((s | VertexSet{1}) == VertexSet{0, 1, 2, 5});
  CHECK(VertexSet{0, 5}.subset_of(s));
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet::range(3) == VertexSet{0, 1, 2});
  CHECK(VertexSet::single(63).contains(63));
}

TEST_CASE("build_graph examples") {
  const Graph k2(2, {{0, 1}});
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);

  const Graph p3 = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p3 == path(3));

  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4 == cycle(4));
  CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), cap_exceeded);
  CHECK_THROWS_AS(Graph(65, {}), cap_exceeded);
  CHECK_NOTHROW(Graph(64, {{0, 63}}));
  // duplicates collapse
  CHECK(Graph(2, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 12, 0.4);
    for (int u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("closed neighborhoods") {
  const Graph p3 = path(3);
  CHECK(closed_neighborhood(p3, 1) == VertexSet{0, 1, 2});
  CHECK(closed_neighborhood(p3, 0) == VertexSet{0, 1});
  CHECK(closed_neighborhood(path(2), 0) == VertexSet{0, 1});
  CHECK_THROWS_AS(closed_neighborhood(p3, 3), std::out_of_range);
  CHECK_THROWS_AS(p3.neighbors(-1), std::out_of_range);
}

TEST_CASE("degree profile") {
  const DegreeProfile c4 = degree_profile(cycle(4));
  CHECK(c4.min_degree == 2);
  CHECK(c4.max_degree == 2);
  CHECK(c4.regular);
  CHECK(c4.k == 2);

  const DegreeProfile claw = degree_profile(star(3));
  CHECK(claw.min_degree == 1);
  CHECK(claw.max_degree == 3);
  CHECK_FALSE(claw.regular);
  CHECK_FALSE(claw.k.has_value());

  const DegreeProfile k2 = degree_profile(path(2));
  CHECK(k2.regular);
  CHECK(k2.k == 1);
}

TEST_CASE("connectivity predicates") {
  const Graph p5 = path(5);
  CHECK(is_connected(p5));
  CHECK(is_isolate_free(p5));
  CHECK(is_tree(p5));

  const Graph two_k2(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_k2));
  CHECK(is_isolate_free(two_k2));
  CHECK_FALSE(is_tree(two_k2));

  const Graph k1_k2(3, {{1, 2}});
  CHECK_FALSE(is_isolate_free(k1_k2));
  CHECK(is_connected(Graph()));
  CHECK(is_tree(Graph()));
}

TEST_CASE("induced stars") {
  CHECK(has_induced_star(star(3), 3));
  CHECK_FALSE(has_induced_star(cycle(5), 3));
  CHECK(has_induced_star(cycle(5), 2));
  CHECK_THROWS_AS(has_induced_star(cycle(5), 1), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.5);
    for (int s = 2; s <= 4; ++s) CHECK(has_induced_star(g, s) == oracle::has_induced_star(g, s));
  }
}

TEST_CASE("line graphs are claw-free") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph h = oracle::random_graph(rng, 2 + trial % 6, 0.5);
    if (h.edge_count() == 0) continue;
    const LineGraph l = line_graph(h);
    CHECK_FALSE(oracle::has_induced_star(l.graph, 3));
    CHECK(is_claw_free(l.graph));
  }
}

TEST_CASE("simplicial vertices") {
  const Graph p3 = path(3);
  CHECK(is_simplicial(p3, 0));
  CHECK(is_simplicial(p3, 2));
  CHECK_FALSE(is_simplicial(p3, 1));
  CHECK_THROWS_AS(is_simplicial(p3, 5), std::out_of_range);

  const LineGraph l = line_graph(corona(path(2)));
  CHECK(oracle::isomorphic_by_permutation(l.graph, path(3)));
  CHECK(l.graph.degree(0) == 2);
  CHECK_FALSE(is_simplicial(l.graph, 0));
  CHECK(is_simplicial(l.graph, 1));
  CHECK(is_simplicial(l.graph, 2));
}

TEST_CASE("line graph examples") {
  const LineGraph p4 = line_graph(path(4));
  CHECK(p4.graph == path(3));
  CHECK(p4.edge_of == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(line_graph(star(3)).graph == complete(3));
  CHECK(line_graph(complete(3)).graph == complete(3));
  CHECK_THROWS_AS(line_graph(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("maximal cliques agree with brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 9, 0.5);
    std::vector<VertexSet> expected;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) {
      const VertexSet set(s);
      if (!is_clique(g, set)) continue;
      bool maximal = true;
      for (int v = 0; v < g.order(); ++v) {
        if (!set.contains(v) && is_clique(g, set.with(v))) maximal = false;
      }
      if (maximal) expected.push_back(set);
    }
    std::vector<VertexSet> got = maximal_cliques(g);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  CHECK_THROWS_AS(maximal_cliques(cycle(6), 3), cap_exceeded);
}

TEST_CASE("clique graph examples") {
  CHECK(clique_graph(complete(3)) == Graph());
  CHECK(clique_graph(path(3)) == path(2));
  CHECK(clique_graph(path(4)) == path(3));
}

TEST_CASE("corona examples") {
  CHECK(corona(Graph()) == path(2));
  CHECK(oracle::isomorphic_by_permutation(corona(path(2)), path(4)));
  const Graph net = corona(complete(3));
  CHECK(net.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}});
  CHECK(net.label(0) == "x1");
  CHECK(net.label(3) == "y1");
  CHECK_NOTHROW(corona(path(32)));
  CHECK_THROWS_AS(corona(path(33)), cap_exceeded);
}

TEST_CASE("distances") {
  CHECK(distance(path(4), 0, 3) == 3);
  CHECK(distance(cycle(4), 0, 2) == 2);
  CHECK_FALSE(distance(Graph(4, {{0, 1}, {2, 3}}), 0, 2).has_value());
  CHECK(distance(path(4), 2, 2) == 0);
  CHECK_THROWS_AS(distance(path(4), 0, 4), std::out_of_range);
  CHECK(ball(path(5), 2, 1) == VertexSet{1, 2, 3});
}

TEST_CASE("induced subgraph renumbers") {
  const Graph g = induced_subgraph(cycle(5), VertexSet{0, 1, 3});
  CHECK(g.order() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("labels do not affect equality") {
  const Graph plain = path(3);
  const Graph tagged = plain.with_labels({"a", "b", "c"});
  CHECK(plain == tagged);
  CHECK(tagged.find_label("b") == 1);
  CHECK_FALSE(tagged.find_label("z").has_value());
  CHECK(plain.label(0).empty());
  CHECK_THROWS(plain.with_labels({"a"}));
}
