#include "mqtc/mutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

constexpr int kRandomAttempts = 32;

std::string describe(const MutationRecord& r) { return "'" + r.to_string() + "'"; }

[[noreturn]] void reject(const MutationRecord& r, const std::string& why) {
  throw invalid_mutation_error("cannot apply " + describe(r) + ": " + why);
}

// Nodes of the component containing `start` after removing edge start-`away`.
std::vector<char> side_of(const Tree& tree, node_id start, node_id away) {
  std::vector<char> in(static_cast<std::size_t>(tree.node_count()), 0);
  std::vector<std::pair<node_id, node_id>> stack{{start, away}};
  in[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    const auto [v, from] = stack.back();
    stack.pop_back();
    for (const node_id w : tree.neighbors(v)) {
      if (w != from) {
        in[static_cast<std::size_t>(w)] = 1;
        stack.emplace_back(w, v);
      }
    }
  }
  return in;
}

template <typename T>
T pick(const std::vector<T>& items, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

node_id uniform_node(node_id lo, node_id hi, Rng& rng) {
  std::uniform_int_distribution<node_id> d(lo, hi);
  return d(rng);
}

void check_range(const Tree& tree, const MutationRecord& r) {
  for (std::size_t i = 0; i < MutationRecord::operand_count(r.kind); ++i) {
    if (!tree.contains(r.operands[i])) reject(r, "node id out of range");
  }
}

void apply_leaf_interchange(Tree& tree, const MutationRecord& r) {
  const node_id a = r.operands[0], b = r.operands[1];
  if (!tree.is_leaf(a) || !tree.is_leaf(b) || a == b) reject(r, "operands must be two leaves");
  const node_id pa = tree.attachment(a), pb = tree.attachment(b);
  if (pa == pb) return;
  tree.replace_neighbor(pa, a, b);
  tree.replace_neighbor(pb, b, a);
  tree.replace_neighbor(a, pa, pb);
  tree.replace_neighbor(b, pb, pa);
}

void apply_subtree_interchange(Tree& tree, const MutationRecord& r) {
  const node_id u = r.operands[0], x = r.operands[1], w = r.operands[2], y = r.operands[3];
  if (u == w) reject(r, "the two subtrees coincide");
  const auto path = path_between(tree, u, w);
  if (path.size() < 4) reject(r, "the subtrees are fewer than three edges apart");
  if (path[1] != x || path[path.size() - 2] != y) {
    reject(r, "the attachment nodes are not on the connecting path");
  }
  tree.replace_neighbor(x, u, w);
  tree.replace_neighbor(y, w, u);
  tree.replace_neighbor(u, x, y);
  tree.replace_neighbor(w, y, x);
}

void apply_subtree_transfer(Tree& tree, const MutationRecord& r) {
  const auto [u, x, a, b, c, d] = r.operands;
  if (!tree.is_internal(x)) reject(r, "the detachment node must be internal");
  if (!tree.adjacent(u, x) || !tree.adjacent(x, a) || !tree.adjacent(x, b) || a == b ||
      a == u || b == u) {
    reject(r, "the detachment neighborhood does not match");
  }
  if (!tree.adjacent(c, d) || c == x || d == x) reject(r, "the target edge does not exist");
  const auto moving = side_of(tree, u, x);
  if (moving[static_cast<std::size_t>(c)] || moving[static_cast<std::size_t>(d)]) {
    reject(r, "the target edge lies inside the moving subtree");
  }
  tree.replace_neighbor(a, x, b);
  tree.replace_neighbor(b, x, a);
  tree.replace_neighbor(x, a, c);
  tree.replace_neighbor(x, b, d);
  tree.replace_neighbor(c, d, x);
  tree.replace_neighbor(d, c, x);
}

MutationRecord make(MutationKind kind, std::initializer_list<node_id> ops) {
  MutationRecord r;
  r.kind = kind;
  std::copy(ops.begin(), ops.end(), r.operands.begin());
  return r;
}

// Candidate target edges for moving the subtree at u off x.
std::vector<Edge> transfer_targets(const Tree& tree, node_id u, node_id x) {
  const auto moving = side_of(tree, u, x);
  std::vector<Edge> out;
  for (const auto& [c, d] : tree.edges()) {
    if (c == x || d == x) continue;
    if (moving[static_cast<std::size_t>(c)] || moving[static_cast<std::size_t>(d)]) continue;
    out.emplace_back(c, d);
  }
  return out;
}

MutationRecord transfer_record(const Tree& tree, node_id u, node_id x, Edge target) {
  std::array<node_id, 2> rest{};
  std::size_t k = 0;
  for (const node_id v : tree.neighbors(x)) {
    if (v != u) rest[k++] = v;
  }
  return make(MutationKind::subtree_transfer,
              {u, x, rest[0], rest[1], target.first, target.second});
}

}  // namespace

std::string_view to_string(MutationKind kind) noexcept {
  switch (kind) {
    case MutationKind::leaf_interchange: return "leaf_interchange";
    case MutationKind::subtree_interchange: return "subtree_interchange";
    case MutationKind::subtree_transfer: return "subtree_transfer";
  }
  return "unknown";
}

std::string MutationRecord::to_string() const {
  std::string out(mqtc::to_string(kind));
  for (std::size_t i = 0; i < operand_count(kind); ++i) {
    out += ' ';
    out += std::to_string(operands[i]);
  }
  return out;
}

MutationRecord MutationRecord::parse(std::string_view line, std::size_t line_number) {
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start), start + 1);
  }
  if (tokens.empty()) throw parse_error("empty mutation record", line_number, 1);
  MutationRecord r;
  const auto& [name, name_col] = tokens[0];
  if (name == "leaf_interchange") {
    r.kind = MutationKind::leaf_interchange;
  } else if (name == "subtree_interchange") {
    r.kind = MutationKind::subtree_interchange;
  } else if (name == "subtree_transfer") {
    r.kind = MutationKind::subtree_transfer;
  } else {
    throw parse_error("unknown mutation kind '" + std::string(name) + "'", line_number, name_col);
  }
  const std::size_t want = operand_count(r.kind);
  if (tokens.size() != want + 1) {
    throw parse_error(std::string(name) + " takes " + std::to_string(want) + " operands",
                      line_number, name_col);
  }
  for (std::size_t k = 0; k < want; ++k) {
    const auto& [tok, col] = tokens[k + 1];
    node_id v{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0) {
      throw parse_error("invalid node id '" + std::string(tok) + "'", line_number, col);
    }
    r.operands[k] = v;
  }
  return r;
}

MutationRecord inverse(const MutationRecord& r) {
  const auto& o = r.operands;
  switch (r.kind) {
    case MutationKind::leaf_interchange: return r;
    case MutationKind::subtree_interchange:
      return make(MutationKind::subtree_interchange, {o[0], o[3], o[2], o[1]});
    case MutationKind::subtree_transfer:
      return make(MutationKind::subtree_transfer, {o[0], o[1], o[4], o[5], o[2], o[3]});
  }
  return r;
}

void apply(Tree& tree, const MutationRecord& record) {
  check_range(tree, record);
  switch (record.kind) {
    case MutationKind::leaf_interchange: apply_leaf_interchange(tree, record); break;
    case MutationKind::subtree_interchange: apply_subtree_interchange(tree, record); break;
    case MutationKind::subtree_transfer: apply_subtree_transfer(tree, record); break;
  }
}

void apply_all(Tree& tree, const std::vector<MutationRecord>& records) {
  for (const auto& r : records) apply(tree, r);
}

void roll_back(Tree& tree, const std::vector<MutationRecord>& records) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) apply(tree, inverse(*it));
}

std::optional<MutationRecord> leaf_interchange(Tree& tree, Rng& rng) {
  const node_id last_leaf = tree.leaf_count() - 1;
  for (;;) {
    const node_id a = uniform_node(0, last_leaf, rng);
    const node_id b = uniform_node(0, last_leaf, rng);
    if (a == b || tree.are_siblings(a, b)) continue;
    auto r = make(MutationKind::leaf_interchange, {a, b});
    apply_leaf_interchange(tree, r);
    return r;
  }
}

std::optional<MutationRecord> subtree_interchange(Tree& tree, Rng& rng) {
  const node_id n = tree.leaf_count();
  const node_id last = tree.node_count() - 1;
  auto record_for = [&](node_id u, node_id w) -> std::optional<MutationRecord> {
    const auto path = path_between(tree, u, w);
    if (path.size() < 4) return std::nullopt;
    return make(MutationKind::subtree_interchange, {u, path[1], w, path[path.size() - 2]});
  };
  std::optional<MutationRecord> chosen;
  for (int attempt = 0; attempt < kRandomAttempts && !chosen; ++attempt) {
    const node_id u = uniform_node(n, last, rng);
    node_id w = uniform_node(0, last - 1, rng);
    if (w >= u) ++w;
    chosen = record_for(u, w);
  }
  if (!chosen) {
    std::vector<std::pair<node_id, node_id>> eligible;
    for (node_id u = n; u <= last; ++u) {
      for (node_id w = 0; w <= last; ++w) {
        if (w != u && path_length(tree, u, w) >= 3) eligible.emplace_back(u, w);
      }
    }
    if (eligible.empty()) return std::nullopt;
    const auto [u, w] = pick(eligible, rng);
    chosen = record_for(u, w);
  }
  apply_subtree_interchange(tree, *chosen);
  return chosen;
}

std::optional<MutationRecord> subtree_transfer(Tree& tree, Rng& rng) {
  const node_id last = tree.node_count() - 1;
  auto internal_neighbors = [&](node_id u) {
    std::vector<node_id> out;
    for (const node_id x : tree.neighbors(u)) {
      if (tree.is_internal(x)) out.push_back(x);
    }
    return out;
  };
  std::optional<MutationRecord> chosen;
  for (int attempt = 0; attempt < kRandomAttempts && !chosen; ++attempt) {
    const node_id u = uniform_node(0, last, rng);
    const auto xs = internal_neighbors(u);
    if (xs.empty()) continue;
    const node_id x = pick(xs, rng);
    const auto targets = transfer_targets(tree, u, x);
    if (!targets.empty()) chosen = transfer_record(tree, u, x, pick(targets, rng));
  }
  if (!chosen) {
    std::vector<MutationRecord> eligible;
    for (node_id u = 0; u <= last; ++u) {
      for (const node_id x : internal_neighbors(u)) {
        for (const Edge& e : transfer_targets(tree, u, x)) {
          eligible.push_back(transfer_record(tree, u, x, e));
        }
      }
    }
    if (eligible.empty()) return std::nullopt;
    chosen = pick(eligible, rng);
  }
  apply_subtree_transfer(tree, *chosen);
  return chosen;
}

MutationRecord simple_mutation(Tree& tree, Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  for (;;) {
    std::optional<MutationRecord> r;
    switch (kind(rng)) {
      case 0: r = leaf_interchange(tree, rng); break;
      case 1: r = subtree_interchange(tree, rng); break;
      default: r = subtree_transfer(tree, rng); break;
    }
    if (r) return *r;
  }
}

std::vector<MutationRecord> k_mutation(Tree& tree, std::int64_t k, Rng& rng) {
  if (k < 1) throw invalid_input_error("a k-mutation needs k >= 1");
  std::vector<MutationRecord> records;
  records.reserve(static_cast<std::size_t>(std::min<std::int64_t>(k, 1 << 16)));
  for (std::int64_t i = 0; i < k; ++i) records.push_back(simple_mutation(tree, rng));
  return records;
}

}  // namespace mqtc
