#pragma once

#include <string>
#include <vector>

#include "egt/common.hpp"

namespace egt::constants {

// Every numeric threshold the algorithms depend on lives here, as exact
// rationals or integer formulas, so the code and the printed table cannot
// drift apart.

inline constexpr int table_version = 1;

// Cluster splitting.
inline Rational alpha_star() { return Rational(1, 64); }
inline BigInt chain_terminal_count(const BigInt& k) { return k / 64; }
inline BigInt chain_secondary_count(const BigInt& k) { return k / 512; }
inline Rational pruned_cluster_bandwidth() { return Rational(1, 23); }
inline Rational split_union_bandwidth() { return Rational(1, 5); }
inline Rational split_piece_bandwidth() { return Rational(1, 33); }
inline Rational split_budget_fraction() { return Rational(1, 32); }
inline constexpr long long phase_width_divisor = 1LL << 17;

// Weak / good / perfect path-of-sets parameters.
inline BigInt weak_to_good_width(const Rational& alpha, const BigInt& w) {
  return rceil(alpha * Rational(w) / 4);
}
inline BigInt double_pos_intermediate_width(const BigInt& w) { return w / 512; }

// Well-linkedness boosting.
inline BigInt boosted_path_count(const Rational& alpha, const BigInt& kappa, int max_degree) {
  return rceil(Rational(3) * alpha * Rational(kappa) / (10 * max_degree));
}
inline BigInt linked_subset_bound(const Rational& alpha, const BigInt& kappa, int max_degree) {
  return rfloor(alpha * Rational(kappa) / (2 * max_degree));
}

// Tree-of-sets construction.
inline Rational tos_alpha(const BigInt& ell) { return Rational(1, 4096 * ell); }
inline Rational cross_edge_weight() { return Rational(11, 10); }
inline Rational partition_drop_min(const BigInt& n) { return Rational(1, 10 * n); }

// Grid extraction.
inline BigInt grid_pos_width(const BigInt& g) { return 16 * g * g + 10 * g; }
inline BigInt grid_pos_length(const BigInt& g) { return 2 * g * (g - 1); }

// Hierarchy of rooted trees feeding the grid-embedding recursion.
inline BigInt hierarchy_width(int d, int g, int q, int z) {
  BigInt p = 1;
  for (int i = 0; i <= z; i++) p *= q;
  return 72 * BigInt(d) * g * p;
}
inline BigInt spine_vertex_count(int q, int z) {
  BigInt p = 1;
  for (int i = 0; i <= z; i++) p *= q;
  return 8 * p + 1;
}
inline BigInt tree_vertex_count(int q) { return 4 * BigInt(q) * q; }
inline BigInt contact_vertex_count(int q) { return BigInt(q) * q; }

struct Row {
  std::string name;
  std::string value;
  std::string context;
};

std::vector<Row> table();

}  // namespace egt::constants
