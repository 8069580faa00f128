#include "mqtc/tree_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

std::string leaf_name(node_id v, std::span<const std::string> names) {
  return names.empty() ? std::to_string(v) : names[static_cast<std::size_t>(v)];
}

bool is_plain(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == '/' || c == '|' ||
           c == '+' || c == '*' || c == '#' || c == '@' || c == '!' || c == '%' || c == '&' ||
           c == '~' || c == '^' || c == '$' || c == '?' || c == '<' || c == '>' || c == '=';
  });
}

std::string quote_newick(const std::string& s) {
  if (is_plain(s)) return s;
  std::string out = "'";
  for (const char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

// Returns the smallest leaf below v; children are written in that order, so
// equal trees print identically.
node_id write_subtree(const Tree& tree, node_id v, node_id parent,
                      std::span<const std::string> names, std::string& out) {
  if (tree.is_leaf(v)) {
    out += quote_newick(leaf_name(v, names));
    return v;
  }
  std::vector<std::pair<node_id, std::string>> parts;
  for (const node_id w : tree.neighbors(v)) {
    if (w == parent) continue;
    std::string text;
    const node_id m = write_subtree(tree, w, v, names, text);
    parts.emplace_back(m, std::move(text));
  }
  std::sort(parts.begin(), parts.end());
  out += '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i].second;
  }
  out += ')';
  return parts.front().first;
}

struct ParsedNode {
  std::string label;
  std::vector<int> children;
};

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  // Node 0 of the returned list is the root.
  std::vector<ParsedNode> parse() {
    nodes_.clear();
    skip_space();
    parse_node();
    skip_space();
    if (at_end() || peek() != ';') fail("expected ';' after the tree");
    advance();
    skip_space();
    if (!at_end()) fail("unexpected text after ';'");
    return std::move(nodes_);
  }

 private:
  int parse_node() {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    skip_space();
    if (!at_end() && peek() == '(') {
      advance();
      for (;;) {
        const int child = parse_node();
        nodes_[static_cast<std::size_t>(id)].children.push_back(child);
        skip_space();
        if (at_end()) fail("unterminated '('");
        if (peek() == ',') {
          advance();
          continue;
        }
        if (peek() == ')') {
          advance();
          break;
        }
        fail(std::string("unexpected character '") + peek() + "'");
      }
    }
    skip_space();
    std::string label = parse_label();
    skip_space();
    if (!at_end() && peek() == ':') {
      advance();
      skip_space();
      parse_length();
    }
    if (nodes_[static_cast<std::size_t>(id)].children.empty() && label.empty()) {
      fail("leaf without a name");
    }
    nodes_[static_cast<std::size_t>(id)].label = std::move(label);
    return id;
  }

  std::string parse_label() {
    std::string out;
    if (at_end()) return out;
    if (peek() == '\'') {
      advance();
      for (;;) {
        if (at_end()) fail("unterminated quoted label");
        const char c = peek();
        advance();
        if (c == '\'') {
          if (!at_end() && peek() == '\'') {
            out += '\'';
            advance();
            continue;
          }
          break;
        }
        out += c;
      }
      return out;
    }
    while (!at_end()) {
      const char c = peek();
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      out += c;
      advance();
    }
    return out;
  }

  void parse_length() {
    std::size_t start = pos_;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
          c == 'e' || c == 'E') {
        advance();
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a branch length after ':'");
  }

  void skip_space() {
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '[') {
        while (!at_end() && peek() != ']') advance();
        if (at_end()) fail("unterminated comment");
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("newick: " + what, line_, column_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<ParsedNode> nodes_;
};

}  // namespace

std::string to_newick(const Tree& tree, std::span<const std::string> names) {
  if (!names.empty() && names.size() != static_cast<std::size_t>(tree.leaf_count())) {
    throw invalid_label_error("name table has " + std::to_string(names.size()) +
                              " entries for a tree with " +
                              std::to_string(tree.leaf_count()) + " leaves");
  }
  std::string out;
  write_subtree(tree, tree.attachment(0), no_node, names, out);
  return out + ";";
}

std::vector<std::string> newick_leaf_names(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& node : NewickParser(text).parse()) {
    if (node.children.empty()) out.push_back(node.label);
  }
  return out;
}

Tree from_newick(std::string_view text, std::span<const std::string> names) {
  const auto nodes = NewickParser(text).parse();

  std::map<std::string, node_id> label_of;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!label_of.emplace(names[i], static_cast<node_id>(i)).second) {
      throw invalid_label_error("duplicate name '" + names[i] + "' in the name table");
    }
  }
  const int n = static_cast<int>(names.size());

  std::vector<node_id> id(nodes.size(), no_node);
  std::vector<char> seen(names.size(), 0);
  node_id next_internal = n;
  int leaves = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (!node.children.empty()) continue;
    ++leaves;
    const auto it = label_of.find(node.label);
    if (it == label_of.end()) {
      throw invalid_label_error("tree leaf '" + node.label + "' is not among the " +
                                std::to_string(n) + " known names");
    }
    if (seen[static_cast<std::size_t>(it->second)]) {
      throw invalid_label_error("leaf '" + node.label + "' appears more than once");
    }
    seen[static_cast<std::size_t>(it->second)] = 1;
    id[i] = it->second;
  }
  if (leaves != n) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!seen[i]) throw invalid_label_error("name '" + names[i] + "' is missing from the tree");
    }
  }
  if (n < 4) throw invalid_size_error("a tree needs at least 4 leaves, got " + std::to_string(n));

  const auto& root = nodes[0];
  if (root.children.size() != 2 && root.children.size() != 3) {
    throw invalid_node_error("root has " + std::to_string(root.children.size()) +
                             " children; only binary and ternary roots are supported");
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const std::size_t k = nodes[i].children.size();
    if (k != 0 && k != 2) {
      throw invalid_node_error("internal node with " + std::to_string(k) +
                               " children; polytomies and unary nodes are not supported");
    }
  }

  const bool binary_root = root.children.size() == 2;
  for (std::size_t i = binary_root ? 1 : 0; i < nodes.size(); ++i) {
    if (!nodes[i].children.empty()) id[i] = next_internal++;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    for (const int c : nodes[i].children) edges.emplace_back(id[i], id[static_cast<std::size_t>(c)]);
  }
  if (binary_root) {
    edges.emplace_back(id[static_cast<std::size_t>(root.children[0])],
                       id[static_cast<std::size_t>(root.children[1])]);
  } else {
    for (const int c : root.children) edges.emplace_back(id[0], id[static_cast<std::size_t>(c)]);
  }
  return Tree::from_edges(n, edges);
}

std::string to_dot(const Tree& tree, std::span<const std::string> names) {
  if (!names.empty() && names.size() != static_cast<std::size_t>(tree.leaf_count())) {
    throw invalid_label_error("name table size does not match the tree");
  }
  auto node_name = [&](node_id v) {
    return tree.is_leaf(v) ? "n" + std::to_string(v)
                           : "k" + std::to_string(v - tree.leaf_count() + 1);
  };
  auto escape = [](const std::string& s) {
    std::string out;
    for (const char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::ostringstream out;
  out << "graph tree {\n";
  for (node_id v = 0; v < tree.node_count(); ++v) {
    if (tree.is_leaf(v)) {
      out << "  " << node_name(v) << " [shape=box, label=\"" << escape(leaf_name(v, names))
          << "\"];\n";
    } else {
      out << "  " << node_name(v) << " [shape=point, xlabel=\"" << node_name(v) << "\"];\n";
    }
  }
  for (const auto& [a, b] : tree.edges()) {
    out << "  " << node_name(a) << " -- " << node_name(b) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mqtc
