#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egt/graph.hpp"

namespace egt {

// Which linkedness notion a query asks about. `alpha` routes every pair of
// disjoint equal-sized terminal subsets with edge-congestion 1/alpha;
// `k_alpha` restricts pair sizes to kprime; `node` demands node-disjoint
// paths. The pair kinds quantify over subsets of two given sets, and the
// bandwidth kinds test the boundary of a cluster inside the cluster.
enum class LinkKind {
  alpha,
  k_alpha,
  node,
  pair_linked,
  pair_node_linked,
  bandwidth,
  k_bandwidth,
};

struct LinkednessQuery {
  const Graph* g = nullptr;
  std::vector<int> T;        // terminals (ignored by bandwidth kinds)
  std::vector<int> T2;       // second side for the pair kinds
  std::vector<int> cluster;  // bandwidth kinds: test Gamma(cluster) in G[cluster]
  LinkKind kind = LinkKind::alpha;
  Rational alpha = Rational(1);
  BigInt kprime = 0;
};

struct ViolatingCut {
  std::vector<int> A, B;
  std::vector<int> cut_edges;
  BigInt min_side_anchors = 0;
};

struct WitnessOrCut {
  bool verdict = false;
  bool exact = true;
  std::optional<ViolatingCut> cut;    // present iff verdict is false and exact
  PathFamily sample_paths;            // routing of the largest pair tested, when cheap
  long long pairs_tested = 0;
  std::string note;
};

struct WLConfig {
  int max_terminals_exhaustive = 14;
  int max_vertices_cutsearch = 20;
  bool allow_inexact = false;
  bool parallel = true;
};

enum class WLMode { exhaustive, cut_search };

WitnessOrCut check_well_linked(const LinkednessQuery& q, WLMode mode,
                               const WLConfig& cfg = {});
WitnessOrCut check_node_well_linked(const Graph& g, const std::vector<int>& T,
                                    const WLConfig& cfg = {});
WitnessOrCut check_node_linked(const Graph& g, const std::vector<int>& T1,
                               const std::vector<int>& T2, const WLConfig& cfg = {});

// Gamma(cluster) alpha-well-linked (or (kprime, alpha) when kprime > 0)
// inside G[cluster].
bool has_bandwidth_property(const Graph& g, const std::vector<int>& cluster,
                            const Rational& alpha, const BigInt& kprime = 0,
                            const WLConfig& cfg = {});

// Largest alpha for which T is alpha-well-linked, as the exact minimum of
// |E(A,B)| / min{|A cap T|, |B cap T|} over all partitions; an absent
// violating partition yields 1 (alpha never exceeds 1).
Rational max_well_linked_alpha(const Graph& g, const std::vector<int>& T,
                               const WLConfig& cfg = {});

// Partitions G into disjoint trees each holding between ceil(1/alpha) and
// 2*max_degree*ceil(1/alpha) terminals, by repeatedly peeling the lowest
// subtree of a rooted spanning tree that collected enough terminals.
// Returned as vertex sets; any transversal (one terminal per tree) is
// 1/2-well-linked.
std::vector<std::vector<int>> group_into_trees(const Graph& g, const std::vector<int>& T,
                                               const Rational& alpha, int max_degree);

// From an alpha-well-linked T of size kappa in a connected graph of maximum
// degree max_degree, selects at least ceil(3*alpha*kappa/(10*max_degree))
// terminals that are node-well-linked.
std::vector<int> boost_node_well_linked(const Graph& g, const std::vector<int>& T,
                                        const Rational& alpha, int max_degree);

// Given node-well-linked T1, T2 whose union is alpha-well-linked and
// |T1|, |T2| >= kappa, any subsets of size at most alpha*kappa/(2*max_degree)
// are node-linked; returns the first `size` elements of each side.
std::pair<std::vector<int>, std::vector<int>> linked_pair_subsets(
    const Graph& g, const std::vector<int>& T1, const std::vector<int>& T2,
    const Rational& alpha, int max_degree, const BigInt& kappa, const BigInt& size);

}  // namespace egt
