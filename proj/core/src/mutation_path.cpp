#include "mqtc/mutation_path.hpp"

#include <algorithm>
#include <numeric>

#include "mqtc/error.hpp"
#include "mqtc/quartet.hpp"

namespace mqtc {

namespace {

MutationRecord subtree_to_leaf(node_id u, node_id x, node_id w, node_id y) {
  MutationRecord r;
  r.kind = MutationKind::subtree_interchange;
  r.operands = {u, x, w, y, no_node, no_node};
  return r;
}

MutationRecord leaf_swap(node_id a, node_id b) {
  MutationRecord r;
  r.kind = MutationKind::leaf_interchange;
  r.operands = {a, b, no_node, no_node, no_node, no_node};
  return r;
}

std::array<node_id, 2> children(const Tree& tree, node_id v, node_id parent) {
  std::array<node_id, 2> out{};
  std::size_t k = 0;
  for (const node_id w : tree.neighbors(v)) {
    if (w != parent) out[k++] = w;
  }
  return out;
}

// Spine of a caterpillar from one end, each spine node with its leaves.
std::vector<std::pair<node_id, std::vector<node_id>>> spine_of(const Tree& cat) {
  node_id start = no_node;
  for (node_id v = cat.leaf_count(); v < cat.node_count() && start == no_node; ++v) {
    const auto nb = cat.neighbors(v);
    if (std::count_if(nb.begin(), nb.end(), [&](node_id w) { return cat.is_leaf(w); }) >= 2) {
      start = v;
    }
  }
  std::vector<std::pair<node_id, std::vector<node_id>>> spine;
  node_id prev = no_node;
  for (node_id v = start; v != no_node;) {
    std::vector<node_id> leaves;
    node_id next = no_node;
    for (const node_id w : cat.neighbors(v)) {
      if (cat.is_leaf(w)) {
        leaves.push_back(w);
      } else if (w != prev) {
        next = w;
      }
    }
    spine.emplace_back(v, std::move(leaves));
    prev = v;
    v = next;
  }
  return spine;
}

}  // namespace

std::vector<MutationRecord> to_caterpillar(Tree& tree) {
  std::vector<MutationRecord> records;
  node_id prev = 0;
  node_id v = tree.attachment(0);
  for (;;) {
    const auto [c1, c2] = children(tree, v, prev);
    if (tree.is_leaf(c1) && tree.is_leaf(c2)) break;
    if (tree.is_leaf(c1) || tree.is_leaf(c2)) {
      prev = v;
      v = tree.is_leaf(c1) ? c2 : c1;
      continue;
    }
    // Pull a leaf from below c2 up next to v; c1's subtree goes down there.
    node_id from = v;
    node_id w = c2;
    while (!tree.is_leaf(w)) {
      const node_id next = children(tree, w, from)[0];
      from = w;
      w = next;
    }
    const auto r = subtree_to_leaf(c1, v, w, from);
    apply(tree, r);
    records.push_back(r);
    prev = v;
    v = c2;
  }
  return records;
}

std::vector<MutationRecord> mutation_path(const Tree& from, const Tree& to) {
  if (from.leaf_count() != to.leaf_count()) {
    throw invalid_comparison_error("mutation path between trees with " +
                                   std::to_string(from.leaf_count()) + " and " +
                                   std::to_string(to.leaf_count()) + " leaves");
  }
  if (trees_equal(from, to)) return {};
  const int n = from.leaf_count();

  Tree work = from;
  std::vector<MutationRecord> path = to_caterpillar(work);

  Tree target_cat = to;
  const std::vector<MutationRecord> target_steps = to_caterpillar(target_cat);

  // Map nodes of the target's caterpillar onto the working caterpillar.
  std::vector<node_id> iso(static_cast<std::size_t>(work.node_count()), no_node);
  const auto spine_work = spine_of(work);
  const auto spine_target = spine_of(target_cat);
  for (std::size_t i = 0; i < spine_target.size(); ++i) {
    iso[static_cast<std::size_t>(spine_target[i].first)] = spine_work[i].first;
    const auto& lt = spine_target[i].second;
    const auto& lw = spine_work[i].second;
    for (std::size_t j = 0; j < lt.size(); ++j) iso[static_cast<std::size_t>(lt[j])] = lw[j];
  }

  // Undo the target's reduction on the working tree.
  for (auto it = target_steps.rbegin(); it != target_steps.rend(); ++it) {
    MutationRecord r = inverse(*it);
    for (std::size_t k = 0; k < MutationRecord::operand_count(r.kind); ++k) {
      r.operands[k] = iso[static_cast<std::size_t>(r.operands[k])];
    }
    apply(work, r);
    path.push_back(r);
  }

  // work now matches `to` through iso; slot s (the place leaf s occupies now)
  // must end up holding label want[s].
  std::vector<node_id> want(static_cast<std::size_t>(n));
  for (node_id label = 0; label < n; ++label) {
    want[static_cast<std::size_t>(iso[static_cast<std::size_t>(label)])] = label;
  }
  std::vector<node_id> occupant(static_cast<std::size_t>(n));
  std::iota(occupant.begin(), occupant.end(), 0);
  std::vector<node_id> slot_of = occupant;
  for (node_id s = 0; s < n; ++s) {
    const auto si = static_cast<std::size_t>(s);
    while (occupant[si] != want[si]) {
      const node_id label = want[si];
      const auto ti = static_cast<std::size_t>(slot_of[static_cast<std::size_t>(label)]);
      if (work.are_siblings(occupant[si], occupant[ti])) {
        // Swapping two sibling labels leaves the tree unchanged.
        std::swap(want[si], want[ti]);
        continue;
      }
      const auto r = leaf_swap(occupant[si], label);
      apply(work, r);
      path.push_back(r);
      std::swap(occupant[si], occupant[ti]);
      slot_of[static_cast<std::size_t>(occupant[si])] = s;
      slot_of[static_cast<std::size_t>(occupant[ti])] = static_cast<node_id>(ti);
    }
  }
  return path;
}

}  // namespace mqtc
