#include "mqtc/fast_cost.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

struct Oriented {
  node_id p;
  // Toward leaf 0 first, then the two children by smallest leaf label.
  std::array<node_id, 3> nb;
};

// Internal nodes in pre-order from leaf 0, children by smallest leaf label.
// The order and side numbering depend on the leaf-labelled tree only, so
// equal trees give bit-identical sums whatever their internal numbering.
std::vector<Oriented> canonical_order(const Tree& tree) {
  const auto size = static_cast<std::size_t>(tree.node_count());
  std::vector<node_id> parent(size, no_node);
  std::vector<node_id> order;
  order.reserve(size);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const node_id v = order[i];
    for (const node_id w : tree.neighbors(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<node_id> min_leaf(size);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const node_id v = *it;
    node_id m = tree.is_leaf(v) ? v : tree.leaf_count();
    for (const node_id w : tree.neighbors(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) {
        m = std::min(m, min_leaf[static_cast<std::size_t>(w)]);
      }
    }
    min_leaf[static_cast<std::size_t>(v)] = m;
  }
  std::vector<Oriented> out;
  out.reserve(static_cast<std::size_t>(tree.internal_count()));
  std::vector<node_id> stack{tree.attachment(0)};
  while (!stack.empty()) {
    const node_id v = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) continue;
    Oriented o{v, {parent[static_cast<std::size_t>(v)], no_node, no_node}};
    std::size_t k = 1;
    for (const node_id w : tree.neighbors(v)) {
      if (w != o.nb[0]) o.nb[k++] = w;
    }
    const auto first = static_cast<std::size_t>(o.nb[1]);
    const auto second = static_cast<std::size_t>(o.nb[2]);
    if (min_leaf[second] < min_leaf[first]) std::swap(o.nb[1], o.nb[2]);
    out.push_back(o);
    stack.push_back(o.nb[2]);
    stack.push_back(o.nb[1]);
  }
  return out;
}

// Marks every leaf with the index (0..2) of the subtree of `p` containing it.
void mark_sides(const Tree& tree, node_id p, const std::array<node_id, 3>& nb,
                std::vector<std::uint8_t>& side, std::array<int, 3>& counts,
                std::vector<std::pair<node_id, node_id>>& stack) {
  for (std::uint8_t s = 0; s < 3; ++s) {
    counts[s] = 0;
    stack.clear();
    stack.emplace_back(nb[s], p);
    while (!stack.empty()) {
      const auto [v, from] = stack.back();
      stack.pop_back();
      if (tree.is_leaf(v)) {
        side[static_cast<std::size_t>(v)] = s;
        ++counts[s];
        continue;
      }
      for (const node_id w : tree.neighbors(v)) {
        if (w != from) stack.emplace_back(w, v);
      }
    }
  }
}

double pairs(int k) { return 0.5 * static_cast<double>(k) * static_cast<double>(k - 1); }

}  // namespace

double tree_cost_fast(const Tree& tree, const DistanceMatrix& dm) {
  const int n = tree.leaf_count();
  if (dm.size() != static_cast<std::size_t>(n)) {
    throw invalid_input_error("distance matrix is " + std::to_string(dm.size()) + "x" +
                              std::to_string(dm.size()) + " but the tree has " +
                              std::to_string(n) + " leaves");
  }
  std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
  std::vector<std::pair<node_id, node_id>> stack;
  std::array<int, 3> counts{};
  double total = 0.0;
  for (const auto& [p, nb] : canonical_order(tree)) {
    mark_sides(tree, p, nb, side, counts, stack);
    // cross[s] accumulates pairs straddling the two subtrees other than s.
    std::array<double, 3> cross{0.0, 0.0, 0.0};
    for (std::size_t u = 0; u + 1 < static_cast<std::size_t>(n); ++u) {
      const double* row = dm.row(u);
      const std::uint8_t su = side[u];
      for (std::size_t v = u + 1; v < static_cast<std::size_t>(n); ++v) {
        const std::uint8_t sv = side[v];
        if (su != sv) cross[3 - su - sv] += row[v];
      }
    }
    total += pairs(counts[0]) * cross[0] + pairs(counts[1]) * cross[1] +
             pairs(counts[2]) * cross[2];
  }
  return total;
}

std::array<int, 3> subtree_leaf_counts(const Tree& tree, node_id p) {
  if (!tree.is_internal(p)) {
    throw invalid_node_error("node " + std::to_string(p) + " is not an internal node");
  }
  std::vector<std::uint8_t> side(static_cast<std::size_t>(tree.leaf_count()));
  std::vector<std::pair<node_id, node_id>> stack;
  std::array<int, 3> counts{};
  const auto nb = tree.neighbors(p);
  mark_sides(tree, p, {nb[0], nb[1], nb[2]}, side, counts, stack);
  return counts;
}

}  // namespace mqtc
