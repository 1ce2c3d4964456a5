#include "egt/constants.hpp"

namespace egt::constants {

std::vector<Row> table() {
  return {
      {"alpha_star", "1/64", "well-linkedness level the splitting decompositions maintain"},
      {"chain_terminal_count", "k/64", "terminals per side of a two-cluster chain"},
      {"chain_secondary_count", "k/512", "secondary path count of a two-cluster chain"},
      {"pruned_cluster_bandwidth", "1/23",
       "bandwidth kept after deleting one boundary vertex from a well-linked cluster"},
      {"split_piece_bandwidth", "1/33", "well-linkedness of each parallel-split piece"},
      {"split_union_bandwidth", "1/5", "well-linkedness of the union of split pieces"},
      {"split_budget_fraction", "1/32", "charging budget used when carving split pieces"},
      {"good_cut_threshold", "k/28",
       "below this balanced-cut value a candidate cluster counts as good"},
      {"perfect_cut_upper", "7*k/32",
       "upper bound on the balanced cut around a perfect cluster"},
      {"phase_width_divisor", "2^17", "width shrink per length-doubling phase"},
      {"weak_to_good_width", "ceil(alpha*w/4)", "cluster width after the weak-to-good upgrade"},
      {"double_pos_intermediate_width", "w/512", "weak width used while doubling a path-of-sets"},
      {"boosted_path_count", "ceil(3*alpha*kappa/(10*Delta))",
       "node-disjoint paths recovered from an edge-congestion-1/alpha flow"},
      {"linked_subset_bound", "floor(alpha*kappa/(2*Delta))",
       "largest subset size guaranteed node-linked after boosting"},
      {"tos_alpha", "1/(2^12*ell)", "well-linkedness target for tree-of-sets clusters"},
      {"cross_edge_weight", "11/10", "potential weight of an edge joining two clusters"},
      {"partition_drop_min", "1/(10*n)", "minimum potential drop of a partition step"},
      {"grid_pos_width", "16*g^2+10*g", "path-of-sets width needed to extract a g-by-g grid"},
      {"grid_pos_length", "2*g*(g-1)", "path-of-sets length needed to extract a g-by-g grid"},
      {"hierarchy_width", "72*d*g*q^(z+1)", "tree-hierarchy width parameter W_z(d)"},
      {"spine_vertex_count", "8*q^(z+1)+1", "spine path length in a level-z hierarchy tree"},
      {"tree_vertex_count", "4*q^2", "auxiliary subtree size in a hierarchy tree"},
      {"contact_vertex_count", "q^2", "contact vertices per hierarchy tree"},
      {"potential_schedule", "rho(n0)=4*alpha; rho(n_i)=4*alpha*w'/n_i + rho(n_(i-1)); n_i=(3/2)*n_(i-1)",
       "acceptable potential per cluster size during tree-of-sets clustering"},
  };
}

}  // namespace egt::constants
