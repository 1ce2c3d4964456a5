#pragma once

#include <vector>

#include "egt/graph.hpp"

namespace egt {

enum class CapacityMode { edge, vertex };

// Integral single-commodity flow between vertex sets. `capacities` is indexed
// by edge id (edge mode) or vertex id (vertex mode); empty means unit.
// source_cap / sink_cap bound the amount injected or absorbed per terminal;
// zero means unlimited.
struct FlowProblem {
  const Graph* g = nullptr;
  std::vector<int> sources, sinks;
  CapacityMode mode = CapacityMode::edge;
  std::vector<long long> capacities;
  long long source_cap = 0;
  long long sink_cap = 0;
};

struct FlowResult {
  long long value = 0;
  PathFamily paths;
  std::vector<long long> path_flow;
  std::vector<int> cut_edges;     // edge-mode certificate, host edge ids
  std::vector<int> cut_vertices;  // vertex-mode certificate
};

// Max flow with an integral path decomposition (at most |E| nonzero paths)
// and a matching minimum-cut certificate.
FlowResult max_flow(const FlowProblem& p);

// A maximum collection of node-disjoint S-T paths (distinct endpoints).
PathFamily node_disjoint_paths(const Graph& g, const std::vector<int>& S,
                               const std::vector<int>& T);

// True iff every vertex of S can send one unit to a distinct vertex of T
// with edge-congestion at most 1/alpha.
bool one_to_one_routable(const Graph& g, const std::vector<int>& S,
                         const std::vector<int>& T, const Rational& alpha);

// In a graph of maximum degree 3 whose path endpoints have degree at most 2,
// edge-disjoint one-to-one path families are automatically node-disjoint;
// verifies the preconditions and returns the family re-tagged.
PathFamily edp_to_ndp_subcubic(const Graph& g, const PathFamily& p);

// From the existence of an S-T flow of value kappa at edge-congestion eta,
// extracts at least ceil(kappa/(d*eta)) node-disjoint S-T paths, d the
// maximum degree. Verifies the premise and fails with a cut otherwise.
PathFamily flow_to_node_disjoint(const Graph& g, const std::vector<int>& S,
                                 const std::vector<int>& T, long long kappa,
                                 long long eta);

// Minimal directed multigraph for the re-routing primitive.
struct DiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  DiGraph() = default;
  explicit DiGraph(int nn) : n(nn) {}
  int add_vertex() { return n++; }
  int add_arc(int u, int v) {
    require(u >= 0 && u < n && v >= 0 && v < n, "arc endpoint out of range");
    arcs.emplace_back(u, v);
    return static_cast<int>(arcs.size()) - 1;
  }
  bool has_arc(int u, int v) const {
    for (auto [a, b] : arcs)
      if (a == u && b == v) return true;
    return false;
  }
};

struct RerouteResult {
  std::vector<std::vector<int>> paths;  // ell1 paths ending at s, disjoint otherwise
  std::vector<int> origin_side;         // 1 or 2 per path; exactly ell2 twos
};

// Given ell1 nearly-disjoint U1-s paths and ell2 < ell1 nearly-disjoint
// U2-s paths (nearly-disjoint: the paths share only s), reroutes to ell1
// nearly-disjoint paths of which exactly ell2 originate in U2 and the rest
// are a subset of X1.
RerouteResult reroute_nearly_disjoint(const DiGraph& g, const std::vector<int>& U1,
                                      const std::vector<int>& U2, int s,
                                      const std::vector<std::vector<int>>& X1,
                                      const std::vector<std::vector<int>>& X2);

}  // namespace egt
