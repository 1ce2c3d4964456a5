#pragma once

#include <optional>
#include <vector>

#include "egt/graph.hpp"
#include "egt/welllinked.hpp"

namespace egt {

// Ground truth by exhaustion. Everything here is written against the bare
// definitions, on top of the Graph data type only; none of the algorithm
// code from the main library is used, so agreement between the two is
// meaningful evidence.

struct OracleBudget {
  int max_vertices = 16;
  int max_terminals = 14;
  int max_pattern_size = 9;
  double time_cap_seconds = 120.0;
};

// Exact treewidth via elimination-ordering DP over vertex subsets.
int brute_treewidth(const Graph& g, const OracleBudget& b = {.max_vertices = 10});

// Exhaustive search for a minor model: disjoint connected branch sets with a
// host edge for every pattern edge. Returns a model whose edge paths are
// those single host edges, or nothing if the pattern is not a minor.
std::optional<MinorModel> brute_minor_test(const Graph& g, const Graph& pattern,
                                           const OracleBudget& b = {.max_vertices = 14});

// Quantifier-complete enumeration of the linkedness definitions: every
// admissible subset pair is tested with a fresh max-flow.
bool brute_well_linked(const LinkednessQuery& q, const OracleBudget& b = {.max_vertices = 20});

struct BruteCut {
  std::vector<int> A, B;
  long long value = 0;
};

// Exact minimum rho-balanced cut of G[cluster] with respect to anchors,
// minimizing |E(A,B)|, then the smaller anchor-side size, then A
// lexicographically (with A the side holding the smallest cluster vertex).
BruteCut brute_min_balanced_cut(const Graph& g, const std::vector<int>& cluster,
                                const std::vector<int>& anchors, const Rational& rho,
                                const OracleBudget& b = {});

// Size of the largest node-well-linked vertex subset.
int max_node_well_linked_size(const Graph& g, const OracleBudget& b = {.max_vertices = 10});

}  // namespace egt
