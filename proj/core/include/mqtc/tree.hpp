#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mqtc/random.hpp"

namespace mqtc {

using node_id = std::int32_t;
inline constexpr node_id no_node = -1;

using Edge = std::pair<node_id, node_id>;

/// Unrooted ternary tree with n labeled leaves and n-2 unlabeled internal
/// nodes.
///
/// Node ids 0..n-1 are the leaves and coincide with the leaf labels; ids
/// n..2n-3 are internal nodes whose numbering carries no meaning. Leaves have
/// exactly one neighbor, internal nodes exactly three.
class Tree {
 public:
  Tree() = default;

  /// Builds a tree from 2n-3 undirected edges over node ids 0..2n-3.
  /// Throws invalid_size_error for n < 4 and invalid_input_error when the
  /// edges do not describe a valid ternary tree.
  static Tree from_edges(int leaf_count, std::span<const Edge> edges);

  int leaf_count() const noexcept { return leaf_count_; }
  int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int internal_count() const noexcept { return node_count() - leaf_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  bool is_leaf(node_id v) const noexcept { return v >= 0 && v < leaf_count_; }
  bool is_internal(node_id v) const noexcept {
    return v >= leaf_count_ && v < node_count();
  }
  bool contains(node_id v) const noexcept { return v >= 0 && v < node_count(); }

  std::span<const node_id> neighbors(node_id v) const noexcept {
    return {adjacency_[static_cast<std::size_t>(v)].data(),
            is_leaf(v) ? std::size_t{1} : std::size_t{3}};
  }

  /// The single neighbor of a leaf.
  node_id attachment(node_id leaf) const noexcept {
    return adjacency_[static_cast<std::size_t>(leaf)][0];
  }

  bool adjacent(node_id a, node_id b) const noexcept;
  bool are_siblings(node_id leaf_a, node_id leaf_b) const noexcept {
    return leaf_a != leaf_b && attachment(leaf_a) == attachment(leaf_b);
  }

  /// All 2n-3 edges, each as (smaller id, larger id), in ascending order.
  std::vector<Edge> edges() const;

  /// Replaces neighbor `from` of `v` by `to`. Low-level primitive for the
  /// mutation operators; does not keep the tree valid on its own.
  void replace_neighbor(node_id v, node_id from, node_id to);

  /// Throws invalid_input_error unless every structural invariant holds.
  void validate() const;

  /// Structural equality of the adjacency (same ids, same neighbor sets).
  /// Leaf-labeled identity ignoring internal ids is `trees_equal`.
  bool same_adjacency(const Tree& other) const;

  /// Returns a tree with internal ids permuted by `perm` (perm[i] is the new
  /// id of internal node n+i).
  Tree relabel_internal(std::span<const node_id> perm) const;

 private:
  int leaf_count_ = 0;
  std::vector<std::array<node_id, 3>> adjacency_;
};

/// Uniformly random labeled ternary tree on n leaves, grown by inserting
/// leaves 3..n-1 on uniformly chosen edges of the 3-leaf star.
Tree random_tree(int leaf_count, Rng& rng);

/// The linear ("caterpillar") tree: internal nodes form a path, each carrying
/// one leaf, the two ends carrying two. Leaves appear in label order.
Tree caterpillar_tree(int leaf_count);

/// Number of edges on the path between two nodes.
int path_length(const Tree& tree, node_id from, node_id to);

/// Path lengths between all pairs of leaves, row-major n*n.
std::vector<int> leaf_path_lengths(const Tree& tree);

/// Nodes on the path from `from` to `to`, both ends included.
std::vector<node_id> path_between(const Tree& tree, node_id from, node_id to);

/// Leaves of the component containing `start` once the edge start-`away`
/// is removed, in ascending order.
std::vector<node_id> leaves_beyond(const Tree& tree, node_id start, node_id away);

/// Canonical encoding of the leaf-labeled topology: the tree rooted at leaf 0
/// written in parenthesised form with children ordered by smallest leaf
/// label. Equal strings iff equal leaf-labeled trees.
std::string canonical_form(const Tree& tree);

}  // namespace mqtc
