#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "egt/graph.hpp"
#include "egt/io.hpp"

using namespace egt;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("boundary of a cycle segment") {
  Graph g = cycle(4);
  auto b = boundary(g, {0, 1});
  CHECK(b.gamma == std::vector<int>{0, 1});
  CHECK(b.out_edges.size() == 2);
}

TEST_CASE("boundary of the whole graph is empty") {
  Graph g = cycle(4);
  auto b = boundary(g, {0, 1, 2, 3});
  CHECK(b.gamma.empty());
  CHECK(b.out_edges.empty());
}

TEST_CASE("center of the 3x3 grid") {
  Graph g = make_grid(3);
  int c = grid_vertex(3, 2, 2);
  auto b = boundary(g, {c});
  CHECK(b.out_edges.size() == 4);
  CHECK(b.gamma == std::vector<int>{c});
}

TEST_CASE("boundary is local: inner edges never change out(C)") {
  Graph g = make_grid(3);
  std::vector<int> c = {0, 1, 3, 4};
  auto before = boundary(g, c);
  g.add_edge(0, 4);
  auto after = boundary(g, c);
  CHECK(before.out_edges.size() == after.out_edges.size());
  CHECK(before.gamma == after.gamma);
}

TEST_CASE("grid shape") {
  for (int g = 1; g <= 4; g++) {
    Graph gr = make_grid(g);
    CHECK(gr.n == g * g);
    CHECK(gr.m() == 2 * g * (g - 1));
    if (g >= 2) {
      CHECK(gr.degree(grid_vertex(g, 1, 1)) == 2);
      CHECK(gr.max_degree() == (g >= 3 ? 4 : 2));
    }
  }
  // Every row meets the first column.
  Graph g3 = make_grid(3);
  for (int i = 1; i <= 3; i++) {
    CHECK(g3.has_edge(grid_vertex(3, i, 1), grid_vertex(3, i, 2)));
  }
}

TEST_CASE("gamma_prime adds interior terminals") {
  Graph g = cycle(4);
  g.set_terminal(0);
  g.set_terminal(2);
  auto gp = gamma_prime(g, {0, 1, 2});
  CHECK(gp == std::vector<int>{0, 2});
  auto gp_all = gamma_prime(g, {0, 1, 2, 3});
  CHECK(gp_all == std::vector<int>{0, 2});
}

TEST_CASE("induced connectivity") {
  Graph g = make_grid(3);
  CHECK(induced_connected(g, {0, 1, 2}));
  CHECK_FALSE(induced_connected(g, {0, 2}));
  CHECK_FALSE(induced_connected(g, {}));
  auto comps = induced_components(g, {0, 2, 8});
  CHECK(comps.size() == 3);
}

TEST_CASE("multigraph edges are counted separately") {
  Graph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK(g.m() == 2);
  CHECK(g.edge_multiplicity(0, 1) == 2);
  CHECK(g.degree(0) == 2);
  PathFamily f;
  f.kind = Disjointness::edge;
  f.paths = {{0, 1}, {1, 0}};
  CHECK(check_path_family(g, f).empty());
  f.paths.push_back({0, 1});
  CHECK_FALSE(check_path_family(g, f).empty());
}

TEST_CASE("path family checks") {
  Graph g = make_grid(3);
  PathFamily f;
  f.paths = {{0, 1, 2}, {3, 4, 5}};
  CHECK(check_path_family(g, f).empty());

  f.paths = {{0, 1, 2}, {2, 5}};
  auto err = check_path_family(g, f);
  CHECK(err.find("share vertex") != std::string::npos);

  f.kind = Disjointness::edge;
  CHECK(check_path_family(g, f).empty());

  f.kind = Disjointness::congestion;
  f.eta = 2;
  f.paths = {{0, 1}, {0, 1}, {0, 1}};
  CHECK_FALSE(check_path_family(g, f).empty());
  f.paths.pop_back();
  CHECK(check_path_family(g, f).empty());

  f = PathFamily{};
  f.paths = {{0, 1, 2}};
  f.internal_disjoint_from = {1};
  CHECK(check_path_family(g, f).find("excluded") != std::string::npos);
  f.internal_disjoint_from = {0, 2};
  CHECK(check_path_family(g, f).empty());

  f.paths = {{0, 1, 0}};
  CHECK(check_path_family(g, f).find("revisits") != std::string::npos);
  f.paths = {{0, 4}};
  CHECK(check_path_family(g, f).find("no edge") != std::string::npos);
}

TEST_CASE("C4 carries a 2x2 grid model") {
  Graph g = cycle(4);
  MinorModel m;
  m.pattern = make_grid(2);
  m.branch_sets = {{0}, {1}, {3}, {2}};
  // 2x2 grid edges: (1,1)-(1,2), (2,1)-(2,2), (1,1)-(2,1), (1,2)-(2,2).
  m.edge_paths = {{0, 1}, {3, 2}, {0, 3}, {1, 2}};
  auto rep = verify_minor_model(g, m);
  CHECK(rep.ok);
  CHECK(rep.violation.empty());
}

TEST_CASE("overlapping branch sets are rejected") {
  Graph g = cycle(4);
  MinorModel m;
  m.pattern = make_grid(2);
  m.branch_sets = {{0}, {1}, {3, 0}, {2}};
  m.edge_paths = {{0, 1}, {3, 2}, {0, 3}, {1, 2}};
  auto rep = verify_minor_model(g, m);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("disjointness") != std::string::npos);
}

TEST_CASE("edge paths must avoid branch sets internally") {
  Graph g = make_grid(3);
  MinorModel m;
  m.pattern = Graph(2);
  m.pattern.add_edge(0, 1);
  m.branch_sets = {{0}, {2}};
  m.edge_paths = {{0, 1, 2}};
  CHECK(verify_minor_model(g, m).ok);

  m.branch_sets = {{0, 1}, {2}};
  m.edge_paths = {{1, 2}};
  CHECK(verify_minor_model(g, m).ok);

  m.branch_sets = {{0}, {2}};
  m.edge_paths = {{0, 3, 2}};
  CHECK_FALSE(verify_minor_model(g, m).ok);  // 0-3 is not an edge

  MinorModel bad;
  bad.pattern = Graph(3);
  bad.pattern.add_edge(0, 1);
  bad.pattern.add_edge(1, 2);
  bad.branch_sets = {{0}, {4}, {8}};
  bad.edge_paths = {{0, 1, 4}, {4, 5, 8}};
  CHECK(verify_minor_model(g, bad).ok);
  // Two edge paths may meet only inside a branch set, not at an inner vertex.
  bad.branch_sets = {{0}, {2}, {8}};
  bad.edge_paths = {{0, 1, 4, 1, 2}, {2, 5, 8}};
  CHECK_FALSE(verify_minor_model(g, bad).ok);
  bad.edge_paths = {{0, 3, 4, 1, 2}, {2, 5, 4, 7, 8}};
  auto rep = verify_minor_model(g, bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("share inner vertex") != std::string::npos);
}

TEST_CASE("disconnected branch set is rejected") {
  Graph g = make_grid(3);
  MinorModel m;
  m.pattern = Graph(2);
  m.pattern.add_edge(0, 1);
  m.branch_sets = {{0, 2}, {8}};
  m.edge_paths = {{2, 5, 8}};
  auto rep = verify_minor_model(g, m);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("not connected") != std::string::npos);
}

TEST_CASE("text round trip") {
  Graph g = make_grid(2);
  g.set_terminal(0);
  g.set_terminal(3);
  std::string text = graph_to_text(g);
  std::istringstream in(text);
  Graph g2 = load_graph(in);
  CHECK(g2.n == g.n);
  CHECK(g2.edges == g.edges);
  CHECK(g2.terminals() == g.terminals());
  CHECK(graph_to_text(g2) == text);
}

TEST_CASE("parser reports locations") {
  auto expect_fail = [](const std::string& text, const std::string& what) {
    std::istringstream in(text);
    try {
      load_graph(in, "input");
      FAIL("expected parse error for: " << text);
    } catch (const error& e) {
      CHECK(std::string(e.what()).find(what) != std::string::npos);
      CHECK(std::string(e.what()).find("input:") != std::string::npos);
    }
  };
  expect_fail("e 1 2\n", "edge before header");
  expect_fail("p 2 1\ne 1 3\n", "out of range");
  expect_fail("p 2 1\ne 1 1\n", "self-loop");
  expect_fail("p 2 2\ne 1 2\n", "declares 2 edges");
  expect_fail("p 2 0\nq 1\n", "unknown line kind");
  expect_fail("", "missing");
  std::istringstream ok("c comment\np 3 1\ne 1 2\nt 3\n");
  Graph g = load_graph(ok);
  CHECK(g.n == 3);
  CHECK(g.is_terminal(2));
}

TEST_CASE("json round trips") {
  Graph g = make_grid(2);
  g.set_terminal(1);
  auto j = graph_to_json(g);
  Graph g2 = graph_from_json(j);
  CHECK(g2.edges == g.edges);
  CHECK(g2.terminals() == g.terminals());
  CHECK(json_dumps(graph_to_json(g2)) == json_dumps(j));

  MinorModel m;
  m.pattern = make_grid(2);
  m.branch_sets = {{0}, {1}, {3}, {2}};
  m.edge_paths = {{0, 1}, {3, 2}, {0, 3}, {1, 2}};
  auto mj = minor_model_to_json(m);
  MinorModel m2 = minor_model_from_json(mj);
  CHECK(m2.branch_sets == m.branch_sets);
  CHECK(m2.edge_paths == m.edge_paths);
  CHECK(json_dumps(minor_model_to_json(m2)) == json_dumps(mj));

  PathFamily f;
  f.kind = Disjointness::congestion;
  f.eta = 3;
  f.paths = {{0, 1}, {1, 3}};
  f.internal_disjoint_from = {2};
  auto fj = path_family_to_json(f);
  PathFamily f2 = path_family_from_json(fj);
  CHECK(f2.paths == f.paths);
  CHECK(f2.eta == 3);
  CHECK(json_dumps(path_family_to_json(f2)) == json_dumps(fj));

  // Byte-identical reparse.
  auto text = json_dumps(mj);
  CHECK(json_dumps(json_parse(text)) == text);
}

TEST_CASE("rational helpers") {
  CHECK(rceil(Rational(7, 2)) == 4);
  CHECK(rceil(Rational(-7, 2)) == -3);
  CHECK(rfloor(Rational(7, 2)) == 3);
  CHECK(rfloor(Rational(-7, 2)) == -4);
  CHECK(rceil(Rational(6, 2)) == 3);
  CHECK(rfloor(Rational(6, 2)) == 3);
}
