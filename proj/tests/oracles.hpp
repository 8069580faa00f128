#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the Tree container and work from the edge
// list only.

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mqtc/distance_matrix.hpp"
#include "mqtc/quartet.hpp"
#include "mqtc/random.hpp"
#include "mqtc/tree.hpp"

namespace oracle {

using mqtc::Edge;
using mqtc::node_id;
using mqtc::Tree;

inline std::vector<std::vector<node_id>> adjacency(const Tree& t) {
  std::vector<std::vector<node_id>> adj(static_cast<std::size_t>(t.node_count()));
  for (const auto& [a, b] : t.edges()) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

// Floyd-Warshall over the edge list; returns node x node hop counts.
inline std::vector<std::vector<int>> all_distances(const Tree& t) {
  const auto size = static_cast<std::size_t>(t.node_count());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(size, std::vector<int>(size, inf));
  for (std::size_t i = 0; i < size; ++i) d[i][i] = 0;
  for (const auto& [a, b] : t.edges()) {
    d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    d[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Vertex set of the unique path between a and b (BFS parents).
inline std::set<node_id> path_vertices(const std::vector<std::vector<node_id>>& adj, node_id a,
                                       node_id b) {
  std::vector<node_id> parent(adj.size(), -2);
  std::queue<node_id> q;
  q.push(a);
  parent[static_cast<std::size_t>(a)] = -1;
  while (!q.empty()) {
    const node_id v = q.front();
    q.pop();
    for (const node_id w : adj[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        q.push(w);
      }
    }
  }
  std::set<node_id> out;
  for (node_id v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) out.insert(v);
  return out;
}

// uv|wx is embedded iff the u-v and w-x paths share no vertex.
inline bool consistent(const Tree& t, node_id u, node_id v, node_id w, node_id x) {
  const auto adj = adjacency(t);
  const auto p1 = path_vertices(adj, u, v);
  const auto p2 = path_vertices(adj, w, x);
  return std::none_of(p1.begin(), p1.end(), [&](node_id z) { return p2.count(z) > 0; });
}

using Topo = std::array<node_id, 4>;  // canonical: a<b, c<d, a<c

inline Topo canonical(node_id u, node_id v, node_id w, node_id x) {
  if (u > v) std::swap(u, v);
  if (w > x) std::swap(w, x);
  if (w < u) {
    std::swap(u, w);
    std::swap(v, x);
  }
  return {u, v, w, x};
}

// Embedded topology set by the path-disjointness definition.
inline std::set<Topo> quartet_set(const Tree& t) {
  const int n = t.leaf_count();
  const auto adj = adjacency(t);
  std::set<Topo> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::array<Topo, 3> options{Topo{a, b, c, d}, Topo{a, c, b, d}, Topo{a, d, b, c}};
          for (const auto& o : options) {
            const auto p1 = path_vertices(adj, o[0], o[1]);
            const auto p2 = path_vertices(adj, o[2], o[3]);
            if (std::none_of(p1.begin(), p1.end(), [&](node_id z) { return p2.count(z) > 0; })) {
              out.insert(o);
            }
          }
        }
  return out;
}

inline bool same_tree(const Tree& a, const Tree& b) { return quartet_set(a) == quartet_set(b); }

// Every labeled ternary tree on n leaves: start from the 3-leaf star and
// insert leaf i on each edge in turn.
inline std::vector<Tree> all_trees(int n) {
  std::vector<Tree> out;
  std::function<void(std::vector<Edge>, int)> grow = [&](std::vector<Edge> edges, int leaf) {
    if (leaf == n) {
      out.push_back(Tree::from_edges(n, edges));
      return;
    }
    const node_id fresh = n + leaf - 2;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto next = edges;
      const auto [a, b] = next[e];
      next[e] = {a, fresh};
      next.emplace_back(fresh, b);
      next.emplace_back(leaf, fresh);
      grow(std::move(next), leaf + 1);
    }
  };
  grow({{0, n}, {1, n}, {2, n}}, 3);
  return out;
}

// Cost of a tree under topo -> cost, by the definition.
template <typename CostFn>
double tree_cost(const Tree& t, CostFn&& cost) {
  double total = 0.0;
  for (const auto& topo : quartet_set(t)) total += cost(topo);
  return total;
}

inline mqtc::DistanceMatrix random_matrix(int n, mqtc::Rng& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(0.0, scale);
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = u(rng);
      v[static_cast<std::size_t>(i * n + j)] = x;
      v[static_cast<std::size_t>(j * n + i)] = x;
    }
  return mqtc::DistanceMatrix(static_cast<std::size_t>(n), std::move(v));
}

// Random matrix of multiples of 1/16 below 1: every sum stays exact.
inline mqtc::DistanceMatrix dyadic_matrix(int n, mqtc::Rng& rng) {
  std::uniform_int_distribution<int> u(1, 15);
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = u(rng) / 16.0;
      v[static_cast<std::size_t>(i * n + j)] = x;
      v[static_cast<std::size_t>(j * n + i)] = x;
    }
  return mqtc::DistanceMatrix(static_cast<std::size_t>(n), std::move(v));
}

// Prose-like text: words drawn from a fixed random vocabulary, no long
// verbatim repeats.
inline std::vector<std::uint8_t> word_text(std::size_t size, mqtc::Rng& rng) {
  std::uniform_int_distribution<int> letter('a', 'z');
  std::uniform_int_distribution<int> length(2, 9);
  std::vector<std::string> vocabulary(400);
  for (auto& w : vocabulary) {
    const int len = length(rng);
    for (int i = 0; i < len; ++i) w += static_cast<char>(letter(rng));
  }
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary.size() - 1);
  std::vector<std::uint8_t> out;
  while (out.size() < size) {
    const auto& w = vocabulary[pick(rng)];
    out.insert(out.end(), w.begin(), w.end());
    out.push_back(' ');
  }
  out.resize(size);
  return out;
}

// Five-object instance with no perfect tree: labels u,v,w,x,y = 0..4.
// Returns cost(topology) for the canonical labels.
inline double five_object_cost(const Topo& t, double eps) {
  const std::set<Topo> zero{canonical(0, 2, 3, 1), canonical(0, 3, 1, 2), canonical(3, 4, 0, 1),
                            canonical(2, 4, 0, 1), canonical(0, 4, 2, 3), canonical(1, 4, 2, 3)};
  if (t == canonical(0, 1, 2, 3)) return 1.0 - eps;
  return zero.count(t) ? 0.0 : 1.0;
}

// T0 = (y,((u,v),(w,x))).
inline Tree five_object_optimum() {
  const std::vector<Edge> edges{{0, 5}, {1, 5}, {5, 6}, {4, 6}, {6, 7}, {2, 7}, {3, 7}};
  return Tree::from_edges(5, edges);
}

}  // namespace oracle
