#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "egt/graph.hpp"
#include "egt/oracles.hpp"

using namespace egt;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) g.add_edge(i, j);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; i++) g.add_edge(0, i);
  return g;
}

// Two triangles whose apexes are joined by a bridge.
Graph barbell() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("treewidth anchors") {
  CHECK(brute_treewidth(path_graph(1)) == 0);
  CHECK(brute_treewidth(path_graph(7)) == 1);
  CHECK(brute_treewidth(star(6)) == 1);
  CHECK(brute_treewidth(complete(4)) == 3);
  CHECK(brute_treewidth(make_grid(2)) == 2);
  CHECK(brute_treewidth(make_grid(3)) == 3);
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK(brute_treewidth(two_edges) == 1);
  CHECK_THROWS_AS(brute_treewidth(make_grid(4)), error);  // over the default budget
}

TEST_CASE("minor search finds grids") {
  auto m = brute_minor_test(complete(4), make_grid(2));
  REQUIRE(m.has_value());
  CHECK(verify_minor_model(complete(4), *m).ok);

  auto id = brute_minor_test(make_grid(3), make_grid(3));
  REQUIRE(id.has_value());
  CHECK(verify_minor_model(make_grid(3), *id).ok);

  CHECK_FALSE(brute_minor_test(star(8), make_grid(3)).has_value());
  CHECK_FALSE(brute_minor_test(path_graph(9), make_grid(2)).has_value());

  auto big = brute_minor_test(make_grid(4), make_grid(3), {.max_vertices = 16});
  REQUIRE(big.has_value());
  CHECK(verify_minor_model(make_grid(4), *big).ok);
}

TEST_CASE("minor search budget") {
  CHECK_THROWS_AS(brute_minor_test(make_grid(4), make_grid(2)), error);
  CHECK_THROWS_AS(brute_minor_test(complete(4), make_grid(4), {.max_vertices = 16}), error);
}

TEST_CASE("well-linkedness of small named graphs") {
  Graph c4(4);
  for (int i = 0; i < 4; i++) c4.add_edge(i, (i + 1) % 4);
  LinkednessQuery q;
  q.g = &c4;
  q.T = {0, 1, 2, 3};
  q.alpha = 1;
  CHECK(brute_well_linked(q));

  Graph k13 = star(3);
  q.g = &k13;
  q.T = {1, 2, 3};
  CHECK(brute_well_linked(q));

  Graph bb = barbell();
  q.g = &bb;
  q.T = {0, 1, 4, 5};
  CHECK_FALSE(brute_well_linked(q));
  q.alpha = Rational(1, 2);
  CHECK(brute_well_linked(q));  // the bridge carries both pairs at congestion exactly 2
  q.alpha = Rational(2, 3);
  CHECK_FALSE(brute_well_linked(q));

  q.T = {};
  q.alpha = 1;
  CHECK(brute_well_linked(q));
  q.T = {0};
  CHECK(brute_well_linked(q));
}

TEST_CASE("restricted pair sizes") {
  Graph bb = barbell();
  LinkednessQuery q;
  q.g = &bb;
  q.T = {0, 1, 4, 5};
  q.kind = LinkKind::k_alpha;
  q.kprime = 1;
  q.alpha = 1;
  CHECK(brute_well_linked(q));  // single pairs route along the bridge
  q.kprime = 2;
  CHECK_FALSE(brute_well_linked(q));
}

TEST_CASE("node-well-linkedness") {
  Graph g3 = make_grid(3);
  LinkednessQuery q;
  q.g = &g3;
  q.kind = LinkKind::node;
  q.T = {grid_vertex(3, 1, 1), grid_vertex(3, 2, 1), grid_vertex(3, 3, 1)};
  CHECK(brute_well_linked(q));

  Graph p5 = path_graph(5);
  q.g = &p5;
  q.T = {0, 4};
  CHECK(brute_well_linked(q));
  q.T = {0, 1, 3, 4};
  CHECK_FALSE(brute_well_linked(q));  // inner pairs need two disjoint paths
}

TEST_CASE("pair linkedness") {
  Graph g3 = make_grid(3);
  LinkednessQuery q;
  q.g = &g3;
  q.kind = LinkKind::pair_node_linked;
  q.T = {grid_vertex(3, 1, 1), grid_vertex(3, 2, 1), grid_vertex(3, 3, 1)};
  q.T2 = {grid_vertex(3, 1, 3), grid_vertex(3, 2, 3), grid_vertex(3, 3, 3)};
  CHECK(brute_well_linked(q));

  Graph bb = barbell();
  q.g = &bb;
  q.T = {0, 1};
  q.T2 = {4, 5};
  CHECK_FALSE(brute_well_linked(q));
  q.kind = LinkKind::pair_linked;
  q.alpha = 1;
  CHECK_FALSE(brute_well_linked(q));
  q.alpha = Rational(1, 2);
  CHECK(brute_well_linked(q));  // congestion 2 over the bridge suffices
}

TEST_CASE("bandwidth property") {
  Graph g3 = make_grid(3);
  LinkednessQuery q;
  q.g = &g3;
  q.kind = LinkKind::bandwidth;
  q.cluster = {grid_vertex(3, 1, 1), grid_vertex(3, 1, 2), grid_vertex(3, 2, 1),
               grid_vertex(3, 2, 2)};
  q.alpha = 1;
  CHECK(brute_well_linked(q));

  // A path cluster whose two boundary vertices sit at distance 2 is still
  // 1-well-linked; stretching alpha above 1 is not allowed.
  Graph p5 = path_graph(5);
  q.g = &p5;
  q.cluster = {1, 2, 3};
  CHECK(brute_well_linked(q));
  q.alpha = Rational(3, 2);
  CHECK_THROWS_AS(brute_well_linked(q), error);
}

TEST_CASE("minimum balanced cuts") {
  Graph c4(4);
  for (int i = 0; i < 4; i++) c4.add_edge(i, (i + 1) % 4);
  auto cut = brute_min_balanced_cut(c4, {0, 1, 2, 3}, {0, 1, 2, 3}, Rational(1, 4));
  CHECK(cut.value == 2);
  CHECK(cut.A.size() + cut.B.size() == 4);

  Graph bb = barbell();
  auto bridge = brute_min_balanced_cut(bb, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5},
                                       Rational(1, 4));
  CHECK(bridge.value == 1);
  CHECK(bridge.A == std::vector<int>{0, 1, 2});
  CHECK(bridge.B == std::vector<int>{3, 4, 5});

  CHECK_THROWS_AS(
      brute_min_balanced_cut(c4, {0, 1, 2, 3}, {0}, Rational(1, 2)), error);
  CHECK_THROWS_AS(
      brute_min_balanced_cut(c4, {0, 1, 2, 3}, {0, 1, 2, 3}, Rational(2, 3)), error);

  // Tie-breaking: on an 8-cycle with rho=1/4 many value-2 cuts exist; the
  // reported one must take the smallest anchor side and then the
  // lexicographically first assignment.
  Graph c8(8);
  for (int i = 0; i < 8; i++) c8.add_edge(i, (i + 1) % 8);
  std::vector<int> all8 = {0, 1, 2, 3, 4, 5, 6, 7};
  auto t = brute_min_balanced_cut(c8, all8, all8, Rational(1, 4));
  CHECK(t.value == 2);
  CHECK(std::min(t.A.size(), t.B.size()) == 2);
  CHECK(t.A == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(t.B == std::vector<int>{6, 7});
}

TEST_CASE("cluster-restricted cuts") {
  // Cutting inside G[cluster] ignores edges that leave the cluster.
  Graph bb = barbell();
  auto cut = brute_min_balanced_cut(bb, {0, 1, 2}, {0, 1, 2}, Rational(1, 3));
  CHECK(cut.value == 2);  // any split of a triangle cuts two of its edges
}

TEST_CASE("largest node-well-linked set") {
  CHECK(max_node_well_linked_size(path_graph(4)) == 3);
  CHECK(max_node_well_linked_size(make_grid(2)) == 4);
  int g3 = max_node_well_linked_size(make_grid(3));
  int tw3 = brute_treewidth(make_grid(3));
  CHECK(g3 >= tw3 + 1);
  CHECK(Rational(g3, 4) - 1 <= tw3);
}
