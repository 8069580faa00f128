#include "mqtc/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

void require_leaf_count(int n) {
  if (n < 4) {
    throw invalid_size_error("a ternary tree needs at least 4 leaves, got " +
                             std::to_string(n));
  }
}

// Iterative DFS collecting parent pointers from `root`; returns the visit order.
std::vector<node_id> dfs_order(const Tree& tree, node_id root,
                               std::vector<node_id>& parent) {
  parent.assign(static_cast<std::size_t>(tree.node_count()), no_node);
  std::vector<node_id> order;
  order.reserve(static_cast<std::size_t>(tree.node_count()));
  std::vector<node_id> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    const node_id v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const node_id w : tree.neighbors(v)) {
      if (parent[static_cast<std::size_t>(w)] == no_node) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return order;
}

}  // namespace

Tree Tree::from_edges(int leaf_count, std::span<const Edge> edges) {
  require_leaf_count(leaf_count);
  const int nodes = 2 * leaf_count - 2;
  if (static_cast<int>(edges.size()) != nodes - 1) {
    throw invalid_input_error("expected " + std::to_string(nodes - 1) +
                              " edges, got " + std::to_string(edges.size()));
  }
  Tree t;
  t.leaf_count_ = leaf_count;
  t.adjacency_.assign(static_cast<std::size_t>(nodes), {no_node, no_node, no_node});
  std::vector<int> degree(static_cast<std::size_t>(nodes), 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      throw invalid_input_error("edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ") is out of range");
    }
    for (const auto& [v, w] : {Edge{a, b}, Edge{b, a}}) {
      auto& d = degree[static_cast<std::size_t>(v)];
      const int cap = t.is_leaf(v) ? 1 : 3;
      if (d >= cap) {
        throw invalid_input_error("node " + std::to_string(v) +
                                  " exceeds its degree of " + std::to_string(cap));
      }
      t.adjacency_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d++)] = w;
    }
  }
  t.validate();
  return t;
}

bool Tree::adjacent(node_id a, node_id b) const noexcept {
  const auto nb = neighbors(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(node_count() - 1));
  for (node_id v = 0; v < node_count(); ++v) {
    for (const node_id w : neighbors(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Tree::replace_neighbor(node_id v, node_id from, node_id to) {
  auto& slots = adjacency_[static_cast<std::size_t>(v)];
  const std::size_t deg = is_leaf(v) ? 1 : 3;
  for (std::size_t i = 0; i < deg; ++i) {
    if (slots[i] == from) {
      slots[i] = to;
      return;
    }
  }
  throw invalid_mutation_error("node " + std::to_string(v) +
                               " is not adjacent to " + std::to_string(from));
}

void Tree::validate() const {
  require_leaf_count(leaf_count_);
  const int nodes = node_count();
  if (nodes != 2 * leaf_count_ - 2) {
    throw invalid_input_error("tree has " + std::to_string(nodes) +
                              " nodes, expected " + std::to_string(2 * leaf_count_ - 2));
  }
  for (node_id v = 0; v < nodes; ++v) {
    const auto nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const node_id w = nb[i];
      if (!contains(w) || w == v) {
        throw invalid_input_error("node " + std::to_string(v) +
                                  " is missing a neighbor or has a self loop");
      }
      if (std::count(nb.begin(), nb.end(), w) != 1) {
        throw invalid_input_error("node " + std::to_string(v) + " has a repeated neighbor");
      }
      if (!adjacent(w, v)) {
        throw invalid_input_error("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                  " is not symmetric");
      }
    }
    if (is_leaf(v) && is_leaf(nb[0])) {
      throw invalid_input_error("two leaves are joined directly");
    }
  }
  // n-1 edges with all degrees right: connected iff acyclic.
  std::vector<node_id> parent;
  if (static_cast<int>(dfs_order(*this, 0, parent).size()) != nodes) {
    throw invalid_input_error("tree is not connected");
  }
}

bool Tree::same_adjacency(const Tree& other) const {
  if (leaf_count_ != other.leaf_count_ || node_count() != other.node_count()) return false;
  for (node_id v = 0; v < node_count(); ++v) {
    auto a = adjacency_[static_cast<std::size_t>(v)];
    auto b = other.adjacency_[static_cast<std::size_t>(v)];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

Tree Tree::relabel_internal(std::span<const node_id> perm) const {
  if (static_cast<int>(perm.size()) != internal_count()) {
    throw invalid_input_error("internal permutation has the wrong size");
  }
  auto map = [&](node_id v) {
    return is_leaf(v) ? v : perm[static_cast<std::size_t>(v - leaf_count_)];
  };
  std::vector<Edge> mapped;
  for (const auto& [a, b] : edges()) mapped.emplace_back(map(a), map(b));
  return from_edges(leaf_count_, mapped);
}

Tree random_tree(int leaf_count, Rng& rng) {
  require_leaf_count(leaf_count);
  const int n = leaf_count;
  // Star on leaves 0,1,2 around internal node n; each new leaf i splits an
  // edge with a fresh internal node.
  std::vector<Edge> edges{{0, n}, {1, n}, {2, n}};
  node_id next_internal = n + 1;
  for (node_id leaf = 3; leaf < n; ++leaf) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const std::size_t e = pick(rng);
    const auto [a, b] = edges[e];
    const node_id mid = next_internal++;
    edges[e] = {a, mid};
    edges.emplace_back(mid, b);
    edges.emplace_back(leaf, mid);
  }
  return Tree::from_edges(n, edges);
}

Tree caterpillar_tree(int leaf_count) {
  require_leaf_count(leaf_count);
  const int n = leaf_count;
  std::vector<Edge> edges;
  // Spine n, n+1, ..., 2n-3.
  for (node_id s = n; s < 2 * n - 3; ++s) edges.emplace_back(s, s + 1);
  edges.emplace_back(0, n);
  edges.emplace_back(1, n);
  for (node_id leaf = 2; leaf < n - 2; ++leaf) edges.emplace_back(leaf, n + leaf - 1);
  edges.emplace_back(n - 2, 2 * n - 3);
  edges.emplace_back(n - 1, 2 * n - 3);
  return Tree::from_edges(n, edges);
}

std::vector<node_id> path_between(const Tree& tree, node_id from, node_id to) {
  std::vector<node_id> parent;
  dfs_order(tree, from, parent);
  std::vector<node_id> path;
  for (node_id v = to; v != from; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

int path_length(const Tree& tree, node_id from, node_id to) {
  return static_cast<int>(path_between(tree, from, to).size()) - 1;
}

std::vector<int> leaf_path_lengths(const Tree& tree) {
  const int n = tree.leaf_count();
  const auto nodes = static_cast<std::size_t>(tree.node_count());
  std::vector<int> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<int> dist(nodes);
  std::vector<node_id> queue(nodes);
  for (node_id src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::size_t head = 0, tail = 0;
    queue[tail++] = src;
    dist[static_cast<std::size_t>(src)] = 0;
    while (head < tail) {
      const node_id v = queue[head++];
      for (const node_id w : tree.neighbors(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue[tail++] = w;
        }
      }
    }
    for (node_id dst = 0; dst < n; ++dst) {
      out[static_cast<std::size_t>(src) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(dst)] = dist[static_cast<std::size_t>(dst)];
    }
  }
  return out;
}

std::vector<node_id> leaves_beyond(const Tree& tree, node_id start, node_id away) {
  std::vector<node_id> leaves;
  std::vector<std::pair<node_id, node_id>> stack{{start, away}};
  while (!stack.empty()) {
    const auto [v, from] = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) leaves.push_back(v);
    for (const node_id w : tree.neighbors(v)) {
      if (w != from) stack.emplace_back(w, v);
    }
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

namespace {

// Writes the subtree below `v` (entered from `from`); returns its min label.
node_id write_canonical(const Tree& tree, node_id v, node_id from, std::string& out) {
  if (tree.is_leaf(v)) {
    out += std::to_string(v);
    return v;
  }
  std::array<std::pair<node_id, std::string>, 2> parts;
  std::size_t k = 0;
  for (const node_id w : tree.neighbors(v)) {
    if (w == from) continue;
    parts[k].first = write_canonical(tree, w, v, parts[k].second);
    ++k;
  }
  if (parts[1].first < parts[0].first) std::swap(parts[0], parts[1]);
  out += '(';
  out += parts[0].second;
  out += ',';
  out += parts[1].second;
  out += ')';
  return parts[0].first;
}

}  // namespace

std::string canonical_form(const Tree& tree) {
  std::string out = "0:";
  write_canonical(tree, tree.attachment(0), 0, out);
  return out;
}

}  // namespace mqtc
