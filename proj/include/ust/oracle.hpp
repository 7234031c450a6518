#pragma once

#include <string>
#include <vector>

#include "ust/graph.hpp"
#include "ust/transfer.hpp"

namespace ust {

/// Brute-force ground truth. Everything here is exact and deliberately
/// independent of the electrical machinery in harmonic/transfer.

inline constexpr std::size_t kMaxEnumerationEdges = 25;

struct TreeEnumeration {
  std::vector<EdgeSet> trees;  // sorted lexicographically
  Rational total_weight{0};    // sum over trees of the product of weights
};

/// Backtracking over edges in id order with cycle pruning (include branch) and
/// connectivity pruning (exclude branch), so only productive branches are
/// visited. Throws Error(too_large) above kMaxEnumerationEdges edges.
TreeEnumeration enumerate_spanning_trees(const Graph& g);

/// Determinant of the weighted Laplacian with `deleted` row and column
/// removed: the total spanning-tree weight.
Rational matrix_tree_count(const Graph& g, VertexId deleted = 0);

/// Sum over a,b-bitrees (two-component spanning forests separating a from b)
/// of the product of edge weights.
Rational bitree_weight_sum(const Graph& g, VertexId a, VertexId b);

/// Weight of the trees satisfying `ev` divided by the total weight.
Rational brute_cylinder_prob(const Graph& g, const CylinderEvent& ev);

/// Sorted edge ids joined by ','. Used as census keys.
std::string canonical_tree_key(const EdgeSet& tree);

}  // namespace ust
