#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mqtc/tree.hpp"

namespace mqtc {

/// Four distinct leaf labels in ascending order.
struct Quartet {
  std::array<node_id, 4> labels;

  auto operator<=>(const Quartet&) const = default;
};

/// A pairing uv|wx of four distinct labels, stored canonically: each pair
/// ascending, and pair_a holds the smallest of the four labels.
class QuartetTopology {
 public:
  QuartetTopology(node_id u, node_id v, node_id w, node_id x);

  /// Topology `index` (0..2) of quartet a<b<c<d: 0 = ab|cd, 1 = ac|bd,
  /// 2 = ad|bc.
  static QuartetTopology of(const Quartet& q, int index);

  std::array<node_id, 2> pair_a() const noexcept { return {labels_[0], labels_[1]}; }
  std::array<node_id, 2> pair_b() const noexcept { return {labels_[2], labels_[3]}; }

  Quartet quartet() const noexcept;
  /// Index 0..2 within its quartet, matching `of`.
  int index() const noexcept;

  std::string to_string() const;

  auto operator<=>(const QuartetTopology&) const = default;

 private:
  std::array<node_id, 4> labels_;  // pair_a then pair_b
};

constexpr std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Colexicographic rank of a quartet among all C(n,4) quartets.
constexpr std::size_t quartet_rank(const Quartet& q) {
  return static_cast<std::size_t>(
      choose(static_cast<std::uint64_t>(q.labels[0]), 1) +
      choose(static_cast<std::uint64_t>(q.labels[1]), 2) +
      choose(static_cast<std::uint64_t>(q.labels[2]), 3) +
      choose(static_cast<std::uint64_t>(q.labels[3]), 4));
}

/// Inverse of quartet_rank.
Quartet quartet_unrank(std::size_t rank);

/// Calls fn(quartet, rank) for every quartet of 0..n-1 in ascending rank.
template <typename Fn>
void for_each_quartet(int n, Fn&& fn) {
  std::size_t rank = 0;
  for (node_id d = 3; d < n; ++d)
    for (node_id c = 2; c < d; ++c)
      for (node_id b = 1; b < c; ++b)
        for (node_id a = 0; a < b; ++a) fn(Quartet{{a, b, c, d}}, rank++);
}

/// All C(n,4) quartets in rank order. Throws invalid_size_error for n < 4.
std::vector<Quartet> enumerate_quartets(int n);

/// All 3*C(n,4) topologies, grouped by quartet rank then topology index.
std::vector<QuartetTopology> all_topologies(int n);

/// True iff the u-v and w-x paths of `tree` are vertex-disjoint.
/// Throws invalid_label_error for labels outside the tree.
bool is_consistent(const Tree& tree, const QuartetTopology& topo);

/// Index 0..2 of the topology of `q` embedded in a tree, given the tree's
/// leaf path-length matrix (the embedded pairing has the strictly smallest
/// path-length sum).
int embedded_index(std::span<const int> leaf_paths, int n, const Quartet& q);

/// The C(n,4) topologies embedded in `tree`, in quartet rank order.
std::vector<QuartetTopology> embedded_quartets(const Tree& tree);

/// Leaf-labeled tree identity, ignoring internal ids and neighbor order.
/// Throws invalid_comparison_error if the leaf counts differ.
bool trees_equal(const Tree& a, const Tree& b);

}  // namespace mqtc
