#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mqtc/random.hpp"
#include "mqtc/tree.hpp"

namespace mqtc {

enum class MutationKind : std::uint8_t {
  leaf_interchange,
  subtree_interchange,
  subtree_transfer,
};

std::string_view to_string(MutationKind kind) noexcept;

/// A replayable simple mutation, expressed over node ids.
///
///   leaf_interchange    a b          swap the attachment points of leaves a, b
///   subtree_interchange u x w y      detach u from x and w from y, then attach
///                                    u to y and w to x
///   subtree_transfer    u x a b c d  detach the subtree u (hanging off x),
///                                    join x's other neighbors a-b, then
///                                    insert x into edge c-d
///
/// Every record is invertible (see `inverse`).
struct MutationRecord {
  MutationKind kind = MutationKind::leaf_interchange;
  std::array<node_id, 6> operands{no_node, no_node, no_node, no_node, no_node, no_node};

  static constexpr std::size_t operand_count(MutationKind kind) noexcept {
    switch (kind) {
      case MutationKind::leaf_interchange: return 2;
      case MutationKind::subtree_interchange: return 4;
      case MutationKind::subtree_transfer: return 6;
    }
    return 0;
  }

  /// `kind op1 op2 ...`
  std::string to_string() const;
  /// Parses the textual form; throws parse_error (column relative to line).
  static MutationRecord parse(std::string_view line, std::size_t line_number = 1);

  bool operator==(const MutationRecord&) const = default;
};

MutationRecord inverse(const MutationRecord& record);

/// Applies `record` in place. Throws invalid_mutation_error (leaving the tree
/// untouched) if its operands do not fit the tree.
void apply(Tree& tree, const MutationRecord& record);

/// Applies records in order.
void apply_all(Tree& tree, const std::vector<MutationRecord>& records);

/// Undoes records applied in order, by applying their inverses backwards.
void roll_back(Tree& tree, const std::vector<MutationRecord>& records);

// The three simple mutations. Each picks its operands uniformly at random and
// returns nullopt when the tree admits no such mutation.

/// Swaps two leaves that are not siblings.
std::optional<MutationRecord> leaf_interchange(Tree& tree, Rng& rng);

/// Swaps the subtrees at internal node u and node w (internal or leaf) whose
/// path has at least three edges. No such pair exists for n = 4.
std::optional<MutationRecord> subtree_interchange(Tree& tree, Rng& rng);

/// Detaches a subtree (possibly a single leaf) and reattaches it on another
/// edge so the tree changes.
std::optional<MutationRecord> subtree_transfer(Tree& tree, Rng& rng);

/// Draws the kind uniformly and applies one simple mutation, redrawing when
/// the chosen kind is not possible.
MutationRecord simple_mutation(Tree& tree, Rng& rng);

/// Applies k simple mutations in sequence (k >= 1) and returns their records.
/// Throws invalid_input_error for k < 1.
std::vector<MutationRecord> k_mutation(Tree& tree, std::int64_t k, Rng& rng);

}  // namespace mqtc
