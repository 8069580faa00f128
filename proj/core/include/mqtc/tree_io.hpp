#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mqtc/tree.hpp"

namespace mqtc {

/// Newick text for an unrooted tree. The tree is drawn from the internal node
/// next to leaf 0 as a three-way root; the choice of root carries no
/// meaning. Subtrees are ordered by their smallest leaf, so equal trees give
/// equal text. Leaf i is written as names[i], or as i when `names` is empty.
/// Names that are not plain words are single-quoted.
std::string to_newick(const Tree& tree, std::span<const std::string> names = {});

/// Parses a Newick tree whose leaves carry exactly the given names. Branch
/// lengths, internal labels and [comments] are ignored; a two-way root is
/// dissolved. Throws parse_error on malformed text, invalid_node_error on
/// multifurcations or unary nodes, invalid_label_error when the leaf names
/// differ from `names`, invalid_size_error for fewer than four leaves.
Tree from_newick(std::string_view text, std::span<const std::string> names);

/// Leaf names in order of appearance, without building a tree.
std::vector<std::string> newick_leaf_names(std::string_view text);

/// Graphviz undirected graph; internal nodes are labelled k1..k(n-2).
std::string to_dot(const Tree& tree, std::span<const std::string> names = {});

}  // namespace mqtc
