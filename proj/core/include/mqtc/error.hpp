#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mqtc {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Leaf count below the minimum of four.
class invalid_size_error : public error {
 public:
  using error::error;
};

/// A label outside 0..n-1 or a malformed label set.
class invalid_label_error : public error {
 public:
  using error::error;
};

/// Two objects over different label universes were compared.
class invalid_comparison_error : public error {
 public:
  using error::error;
};

/// An operation was given a node of the wrong kind (e.g. a leaf where an
/// internal node is required).
class invalid_node_error : public error {
 public:
  using error::error;
};

/// Malformed argument values: bad matrices, empty byte strings, dimension
/// mismatches.
class invalid_input_error : public error {
 public:
  using error::error;
};

/// An explicit cost function that does not cover every quartet topology.
class incomplete_cost_error : public error {
 public:
  using error::error;
};

/// Corpus with duplicate item names, too few items or unreadable files.
class invalid_corpus_error : public error {
 public:
  using error::error;
};

/// A mutation record that cannot be applied to the given tree.
class invalid_mutation_error : public error {
 public:
  using error::error;
};

/// Text input that does not parse. Line and column are 1-based.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mqtc
