#include "mqtc/quartet.hpp"

#include <algorithm>

#include "mqtc/error.hpp"

namespace mqtc {

QuartetTopology::QuartetTopology(node_id u, node_id v, node_id w, node_id x) {
  if (u == v || u == w || u == x || v == w || v == x || w == x) {
    throw invalid_label_error("quartet topology labels must be distinct");
  }
  if (u < 0 || v < 0 || w < 0 || x < 0) {
    throw invalid_label_error("quartet topology labels must be nonnegative");
  }
  if (u > v) std::swap(u, v);
  if (w > x) std::swap(w, x);
  if (w < u) {
    std::swap(u, w);
    std::swap(v, x);
  }
  labels_ = {u, v, w, x};
}

QuartetTopology QuartetTopology::of(const Quartet& q, int index) {
  const auto [a, b, c, d] = q.labels;
  switch (index) {
    case 0: return {a, b, c, d};
    case 1: return {a, c, b, d};
    case 2: return {a, d, b, c};
    default: throw invalid_input_error("topology index must be 0, 1 or 2");
  }
}

Quartet QuartetTopology::quartet() const noexcept {
  Quartet q{labels_};
  std::sort(q.labels.begin(), q.labels.end());
  return q;
}

int QuartetTopology::index() const noexcept {
  // pair_a holds the smallest label; its partner decides the pairing.
  const Quartet q = quartet();
  const node_id partner = labels_[1];
  if (partner == q.labels[1]) return 0;
  if (partner == q.labels[2]) return 1;
  return 2;
}

std::string QuartetTopology::to_string() const {
  return std::to_string(labels_[0]) + "," + std::to_string(labels_[1]) + "|" +
         std::to_string(labels_[2]) + "," + std::to_string(labels_[3]);
}

Quartet quartet_unrank(std::size_t rank) {
  Quartet q{};
  auto r = static_cast<std::uint64_t>(rank);
  for (int k = 4; k >= 1; --k) {
    std::uint64_t c = static_cast<std::uint64_t>(k) - 1;
    while (choose(c + 1, static_cast<std::uint64_t>(k)) <= r) ++c;
    q.labels[static_cast<std::size_t>(k - 1)] = static_cast<node_id>(c);
    r -= choose(c, static_cast<std::uint64_t>(k));
  }
  return q;
}

std::vector<Quartet> enumerate_quartets(int n) {
  if (n < 4) throw invalid_size_error("quartets need at least 4 labels");
  std::vector<Quartet> out;
  out.reserve(static_cast<std::size_t>(choose(static_cast<std::uint64_t>(n), 4)));
  for_each_quartet(n, [&](const Quartet& q, std::size_t) { out.push_back(q); });
  return out;
}

std::vector<QuartetTopology> all_topologies(int n) {
  std::vector<QuartetTopology> out;
  for (const Quartet& q : enumerate_quartets(n)) {
    for (int t = 0; t < 3; ++t) out.push_back(QuartetTopology::of(q, t));
  }
  return out;
}

bool is_consistent(const Tree& tree, const QuartetTopology& topo) {
  const auto [u, v] = topo.pair_a();
  const auto [w, x] = topo.pair_b();
  for (const node_id l : {u, v, w, x}) {
    if (!tree.is_leaf(l)) {
      throw invalid_label_error("label " + std::to_string(l) + " is not a leaf of the tree");
    }
  }
  // Remove the u-v path and check that w and x are still connected.
  std::vector<char> blocked(static_cast<std::size_t>(tree.node_count()), 0);
  for (const node_id p : path_between(tree, u, v)) blocked[static_cast<std::size_t>(p)] = 1;
  if (blocked[static_cast<std::size_t>(w)] || blocked[static_cast<std::size_t>(x)]) return false;
  std::vector<node_id> stack{w};
  blocked[static_cast<std::size_t>(w)] = 1;
  while (!stack.empty()) {
    const node_id s = stack.back();
    stack.pop_back();
    if (s == x) return true;
    for (const node_id t : tree.neighbors(s)) {
      if (!blocked[static_cast<std::size_t>(t)]) {
        blocked[static_cast<std::size_t>(t)] = 1;
        stack.push_back(t);
      }
    }
  }
  return false;
}

int embedded_index(std::span<const int> leaf_paths, int n, const Quartet& q) {
  const auto at = [&](node_id i, node_id j) {
    return leaf_paths[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)];
  };
  const auto [a, b, c, d] = q.labels;
  const int s0 = at(a, b) + at(c, d);
  const int s1 = at(a, c) + at(b, d);
  const int s2 = at(a, d) + at(b, c);
  if (s0 < s1 && s0 < s2) return 0;
  return s1 < s2 ? 1 : 2;
}

std::vector<QuartetTopology> embedded_quartets(const Tree& tree) {
  const int n = tree.leaf_count();
  const auto paths = leaf_path_lengths(tree);
  std::vector<QuartetTopology> out;
  out.reserve(static_cast<std::size_t>(choose(static_cast<std::uint64_t>(n), 4)));
  for_each_quartet(n, [&](const Quartet& q, std::size_t) {
    out.push_back(QuartetTopology::of(q, embedded_index(paths, n, q)));
  });
  return out;
}

bool trees_equal(const Tree& a, const Tree& b) {
  if (a.leaf_count() != b.leaf_count()) {
    throw invalid_comparison_error("trees have different leaf sets (" +
                                   std::to_string(a.leaf_count()) + " vs " +
                                   std::to_string(b.leaf_count()) + " leaves)");
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mqtc
