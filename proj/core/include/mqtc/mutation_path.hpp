#pragma once

#include <vector>

#include "mqtc/mutation.hpp"
#include "mqtc/tree.hpp"

namespace mqtc {

/// A sequence of simple mutations turning `from` into a tree equal to `to`
/// (leaf-labeled identity), using only leaf-to-leaf swaps and subtree-to-leaf
/// swaps.
///
/// Both trees are first reduced to the caterpillar shape by subtree-to-leaf
/// swaps (at most n-4 each, walking the spine from a leaf and pulling a leaf
/// up whenever a spine node has two internal children). The second
/// reduction is replayed backwards on the first caterpillar through a shape
/// isomorphism, and the leaves are then put in place by at most n-1 leaf
/// swaps. The length is at most 3n-9, within the 5n-16 bound for n >= 5 and
/// within 4 for n = 4. Equal trees give an empty sequence.
///
/// Throws invalid_comparison_error if the leaf counts differ.
std::vector<MutationRecord> mutation_path(const Tree& from, const Tree& to);

/// Subtree-to-leaf swaps turning `tree` into a caterpillar; `tree` is
/// updated in place.
std::vector<MutationRecord> to_caterpillar(Tree& tree);

}  // namespace mqtc
