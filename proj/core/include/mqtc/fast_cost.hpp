#pragma once

#include <array>

#include "mqtc/distance_matrix.hpp"
#include "mqtc/tree.hpp"

namespace mqtc {

/// C_T for the cost function d(u,v) + d(w,x), in O(n^3).
///
/// Each internal node p splits the leaves into three subtrees T1, T2, T3 of
/// sizes n1, n2, n3. A leaf pair (u,v) straddling Tj and Tk pairs with every
/// one of the C(ni,2) leaf pairs inside Ti, so p contributes
///   sum_i C(ni,2) * sum_{u in Tj, v in Tk} d(u,v)
/// and C_T is the sum over all internal nodes. Nodes are summed in pre-order
/// from leaf 0 (children by smallest leaf label) and leaf pairs in ascending
/// order, so equal trees give bit-identical costs whatever their internal
/// numbering.
///
/// Throws invalid_input_error when the matrix size differs from the leaf
/// count.
double tree_cost_fast(const Tree& tree, const DistanceMatrix& dm);

/// Leaf counts of the three subtrees hanging off internal node `p`, in the
/// order of its neighbor list. Throws invalid_node_error for leaves.
std::array<int, 3> subtree_leaf_counts(const Tree& tree, node_id p);

}  // namespace mqtc
