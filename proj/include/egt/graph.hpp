#pragma once

#include <string>
#include <utility>
#include <vector>

#include "egt/common.hpp"

namespace egt {

// Finite loopless multigraph over dense 0-based vertex ids. Parallel edges
// carry distinct edge ids. Terminal marking lives here so every consumer of T
// has one source of truth.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> inc;  // vertex -> incident edge ids
  std::vector<char> terminal;

  Graph() = default;
  explicit Graph(int nn) { init(nn); }

  void init(int nn);
  int add_vertex();
  int add_edge(int u, int v);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const;
  int max_degree() const;
  int other(int e, int v) const;
  bool valid_vertex(int v) const { return v >= 0 && v < n; }

  void set_terminal(int v, bool on = true);
  bool is_terminal(int v) const;
  std::vector<int> terminals() const;

  std::vector<int> neighbors(int v) const;  // deduplicated, sorted
  bool has_edge(int u, int v) const;
  int edge_multiplicity(int u, int v) const;
  int find_edge(int u, int v) const;  // any edge id joining u,v; -1 if none
};

// Canonical (g x g)-grid: vertex (i,j) has id i*g+j, rows horizontal.
Graph make_grid(int g);
int grid_vertex(int g, int i, int j);

// Vertex subset of a host graph. Boundary data is derived, never stored.
struct Cluster {
  const Graph* g = nullptr;
  std::vector<int> members;  // sorted, unique

  Cluster() = default;
  Cluster(const Graph& gr, std::vector<int> mem);
  bool contains(int v) const;
};

struct BoundaryInfo {
  std::vector<int> gamma;      // vertices of C incident on out-edges
  std::vector<int> out_edges;  // edge ids with exactly one endpoint in C
};

BoundaryInfo boundary(const Graph& g, const std::vector<int>& members);
BoundaryInfo boundary(const Cluster& c);

// Gamma'(S) = Gamma(S) plus the terminals inside S.
std::vector<int> gamma_prime(const Graph& g, const std::vector<int>& members);

bool induced_connected(const Graph& g, const std::vector<int>& members);
std::vector<std::vector<int>> induced_components(const Graph& g,
                                                 const std::vector<int>& members);

// G[members] with vertices relabeled 0..|members|-1 (order of the sorted
// member list). Terminal flags are copied; edge ids map back via edge_to_host.
struct InducedSubgraph {
  Graph g;
  std::vector<int> to_host;    // local vertex -> host vertex
  std::vector<int> from_host;  // host vertex -> local vertex or -1
  std::vector<int> edge_to_host;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& members);

// Marks for fast membership tests.
std::vector<char> vertex_mask(const Graph& g, const std::vector<int>& vs);
std::vector<int> sorted_unique(std::vector<int> vs);
std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b);

enum class Disjointness { node, edge, congestion };

struct PathFamily {
  std::vector<std::vector<int>> paths;  // vertex sequences
  Disjointness kind = Disjointness::node;
  int eta = 1;                              // congestion bound when kind==congestion
  std::vector<int> internal_disjoint_from;  // optional vertex set U

  size_t size() const { return paths.size(); }
  std::vector<int> first_vertices() const;
  std::vector<int> last_vertices() const;
};

// Empty string when the family is consistent with its declaration,
// otherwise the first violation.
std::string check_path_family(const Graph& g, const PathFamily& f);

// Pattern embedded via disjoint connected branch sets plus connecting paths.
// Connecting paths are internally disjoint from each other and from all
// branch sets; two paths may share a vertex only at endpoints lying inside
// branch sets.
struct MinorModel {
  Graph pattern;
  std::vector<std::vector<int>> branch_sets;  // per pattern vertex
  std::vector<std::vector<int>> edge_paths;   // per pattern edge
};

struct VerifyReport {
  bool ok = true;
  std::string violation;
};

VerifyReport verify_minor_model(const Graph& g, const MinorModel& m);

}  // namespace egt
