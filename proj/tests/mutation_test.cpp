#include <gtest/gtest.h>

#include <cmath>

#include "mqtc/error.hpp"
#include "mqtc/fat_tail.hpp"
#include "mqtc/mutation.hpp"
#include "mqtc/mutation_path.hpp"
#include "mqtc/quartet.hpp"
#include "oracles.hpp"

using namespace mqtc;

namespace {

Tree four_leaf(node_id a, node_id b, node_id c, node_id d) {
  const std::vector<Edge> edges{{a, 4}, {b, 4}, {4, 5}, {c, 5}, {d, 5}};
  return Tree::from_edges(4, edges);
}

bool is_caterpillar(const Tree& t) {
  for (node_id v = t.leaf_count(); v < t.node_count(); ++v) {
    int leaves = 0;
    for (const node_id w : t.neighbors(v)) leaves += t.is_leaf(w) ? 1 : 0;
    if (leaves == 0) return false;
  }
  return true;
}

using Operator = std::optional<MutationRecord> (*)(Tree&, Rng&);

}  // namespace

TEST(Mutation, LeafInterchangeOnFourLeaves) {
  Tree t = four_leaf(0, 1, 2, 3);
  MutationRecord r;
  r.kind = MutationKind::leaf_interchange;
  r.operands = {1, 2, no_node, no_node, no_node, no_node};
  apply(t, r);
  EXPECT_TRUE(trees_equal(t, four_leaf(0, 2, 1, 3)));
  MutationRecord siblings = r;
  siblings.operands = {0, 2, no_node, no_node, no_node, no_node};
  const Tree before = t;
  apply(t, siblings);
  EXPECT_TRUE(t.same_adjacency(before));
}

TEST(Mutation, OperatorsPreserveInvariantsAndInvert) {
  const std::array<Operator, 3> ops{&leaf_interchange, &subtree_interchange, &subtree_transfer};
  Rng rng(21);
  for (int rep = 0; rep < 600; ++rep) {
    const int n = 4 + rep % 20;
    Tree t = random_tree(n, rng);
    const Tree before = t;
    const auto r = ops[static_cast<std::size_t>(rep % 3)](t, rng);
    if (!r) {
      EXPECT_TRUE(t.same_adjacency(before));
      continue;
    }
    EXPECT_NO_THROW(t.validate());
    EXPECT_EQ(t.node_count(), 2 * n - 2);
    EXPECT_FALSE(trees_equal(t, before)) << r->to_string();
    Tree back = t;
    apply(back, inverse(*r));
    EXPECT_TRUE(trees_equal(back, before)) << r->to_string();
    EXPECT_TRUE(oracle::same_tree(back, before));
    Tree replay = before;
    apply(replay, *r);
    EXPECT_TRUE(replay.same_adjacency(t));
  }
}

TEST(Mutation, LeafInterchangeChangesQuartets) {
  Rng rng(22);
  for (int rep = 0; rep < 50; ++rep) {
    Tree t = random_tree(6, rng);
    const auto before = oracle::quartet_set(t);
    ASSERT_TRUE(leaf_interchange(t, rng).has_value());
    EXPECT_NE(oracle::quartet_set(t), before);
  }
}

TEST(Mutation, SubtreeInterchangeAvailability) {
  Rng rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    Tree t = random_tree(4, rng);
    EXPECT_FALSE(subtree_interchange(t, rng).has_value());
  }
  for (const auto& base : oracle::all_trees(5)) {
    Tree t = base;
    EXPECT_TRUE(subtree_interchange(t, rng).has_value());
  }
  Tree cat = caterpillar_tree(6);
  MutationRecord ends;
  ends.kind = MutationKind::subtree_interchange;
  // Internal node 6 carries cherry {0,1}; node 9 carries cherry {4,5}.
  ends.operands = {6, 7, 9, 8, no_node, no_node};
  const Tree before = cat;
  apply(cat, ends);
  EXPECT_NO_THROW(cat.validate());
  apply(cat, inverse(ends));
  EXPECT_TRUE(trees_equal(cat, before));
}

TEST(Mutation, TransfersLeaveTheCaterpillarShape) {
  Rng rng(24);
  Tree t = caterpillar_tree(8);
  int draws = 0;
  while (is_caterpillar(t) && draws < 100) {
    ASSERT_TRUE(subtree_transfer(t, rng).has_value());
    ++draws;
  }
  EXPECT_FALSE(is_caterpillar(t));
}

TEST(Mutation, RejectsRecordsThatDoNotFit) {
  Rng rng(25);
  Tree t = random_tree(9, rng);
  const Tree before = t;
  MutationRecord bad;
  bad.kind = MutationKind::subtree_transfer;
  bad.operands = {0, 1, 2, 3, 4, 5};
  EXPECT_THROW(apply(t, bad), invalid_mutation_error);
  bad.kind = MutationKind::leaf_interchange;
  bad.operands = {0, 40, no_node, no_node, no_node, no_node};
  EXPECT_THROW(apply(t, bad), invalid_mutation_error);
  EXPECT_TRUE(t.same_adjacency(before));
}

TEST(Mutation, RecordTextRoundTrip) {
  Rng rng(26);
  Tree t = random_tree(12, rng);
  for (int i = 0; i < 200; ++i) {
    const auto r = simple_mutation(t, rng);
    const auto text = r.to_string();
    EXPECT_EQ(MutationRecord::parse(text), r) << text;
  }
  EXPECT_EQ(MutationRecord::parse("leaf_interchange 3 7").operands[1], 7);
  try {
    MutationRecord::parse("leaf_interchange 3 x7", 4);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 20u);
  }
  EXPECT_THROW(MutationRecord::parse("swap 1 2"), parse_error);
  EXPECT_THROW(MutationRecord::parse("subtree_transfer 1 2"), parse_error);
  EXPECT_THROW(MutationRecord::parse(""), parse_error);
}

TEST(KMutation, CountsAndFuzz) {
  Rng rng(27);
  Tree t = random_tree(10, rng);
  EXPECT_EQ(k_mutation(t, 1, rng).size(), 1u);
  EXPECT_THROW(k_mutation(t, 0, rng), invalid_input_error);

  // From n = 8 on every operator is always available.
  std::uniform_int_distribution<int> size(8, 32);
  std::uniform_int_distribution<int> length(1, 1000);
  std::array<int, 3> kinds{};
  for (int run = 0; run < 10000; ++run) {
    Tree u = random_tree(size(rng), rng);
    const auto records = k_mutation(u, length(rng), rng);
    for (const auto& r : records) ++kinds[static_cast<std::size_t>(r.kind)];
    ASSERT_NO_THROW(u.validate());
  }
  const double total = kinds[0] + kinds[1] + kinds[2];
  for (const int c : kinds) EXPECT_NEAR(c / total, 1.0 / 3.0, 0.01);
}

TEST(KMutation, RollBackRestoresTree) {
  Rng rng(28);
  for (int rep = 0; rep < 100; ++rep) {
    Tree t = random_tree(4 + rep % 15, rng);
    const Tree before = t;
    const auto records = k_mutation(t, 1 + rep % 30, rng);
    roll_back(t, records);
    EXPECT_TRUE(trees_equal(t, before));
  }
}

TEST(FatTail, NormalizerMatchesSeries) {
  // Direct sum to 10^7 plus the midpoint-rule tail 1 / ln(K + 2.5).
  double sum = 0.0;
  const std::int64_t last = 10'000'000;
  for (std::int64_t k = last; k >= 1; --k) {
    const double x = static_cast<double>(k + 2);
    const double l = std::log(x);
    sum += 1.0 / (x * l * l);
  }
  sum += 1.0 / std::log(static_cast<double>(last) + 2.5);
  const auto& dist = FatTailDistribution::standard();
  EXPECT_NEAR(dist.normalizer(), sum, 1e-9);
  EXPECT_NEAR(dist.pmf(1), 1.0 / (3.0 * std::log(3.0) * std::log(3.0)) / sum, 1e-9);
}

TEST(FatTail, PmfShape) {
  const auto& dist = FatTailDistribution::standard();
  EXPECT_EQ(dist.pmf(0), 0.0);
  for (std::int64_t k = 1; k < 5000; ++k) EXPECT_GT(dist.pmf(k), dist.pmf(k + 1));
}

TEST(FatTail, EmpiricalPmfMatches) {
  const auto& dist = FatTailDistribution::standard();
  Rng rng(29);
  const int draws = 40'000'000;
  std::array<std::int64_t, 21> counts{};
  std::int64_t large = 0;
  for (int i = 0; i < draws; ++i) {
    const std::int64_t k = dist(rng);
    ASSERT_GE(k, 1);
    if (k <= 20) ++counts[static_cast<std::size_t>(k)];
    if (k >= 100) ++large;
  }
  for (std::int64_t k = 1; k <= 20; ++k) {
    const double p = dist.pmf(k);
    EXPECT_NEAR(counts[static_cast<std::size_t>(k)] / static_cast<double>(draws), p, 0.01 * p)
        << "k=" << k;
  }
  // P(k >= 100) is about 0.2; well inside 3 sigma of the analytic value.
  double below = 0.0;
  for (std::int64_t k = 1; k < 100; ++k) below += dist.pmf(k);
  const double p_large = 1.0 - below;
  const double sigma = std::sqrt(p_large * (1 - p_large) / draws);
  EXPECT_GT(large, 0);
  EXPECT_NEAR(large / static_cast<double>(draws), p_large, 3 * sigma + 1e-4);
}

TEST(MutationPath, EqualTreesGiveEmptyPath) {
  Rng rng(30);
  const Tree t = random_tree(9, rng);
  std::vector<node_id> perm(7);
  std::iota(perm.begin(), perm.end(), 9);
  std::reverse(perm.begin(), perm.end());
  EXPECT_TRUE(mutation_path(t, t.relabel_internal(perm)).empty());
}

TEST(MutationPath, FourLeafPairs) {
  const auto all = oracle::all_trees(4);
  ASSERT_EQ(all.size(), 3u);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto path = mutation_path(a, b);
      EXPECT_LE(path.size(), 4u);
      Tree t = a;
      apply_all(t, path);
      EXPECT_TRUE(trees_equal(t, b));
    }
}

TEST(MutationPath, RandomPairsWithinBound) {
  Rng rng(31);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 5 + rep % 8;
    const Tree a = random_tree(n, rng);
    const Tree b = random_tree(n, rng);
    const auto path = mutation_path(a, b);
    EXPECT_LE(static_cast<int>(path.size()), 5 * n - 16);
    Tree t = a;
    apply_all(t, path);
    EXPECT_TRUE(trees_equal(t, b));
    EXPECT_TRUE(oracle::same_tree(t, b));
    for (const auto& r : path) {
      ASSERT_NE(r.kind, MutationKind::subtree_transfer);
      if (r.kind == MutationKind::subtree_interchange) {
        // One side of every subtree swap is a single leaf.
        EXPECT_TRUE(a.is_leaf(r.operands[0]) || a.is_leaf(r.operands[2]));
      }
    }
  }
}

TEST(MutationPath, ExhaustiveSmallTrees) {
  for (int n : {5, 6}) {
    const auto all = oracle::all_trees(n);
    for (std::size_t i = 0; i < all.size(); i += (n == 6 ? 7 : 1))
      for (const auto& b : all) {
        const auto path = mutation_path(all[i], b);
        EXPECT_LE(static_cast<int>(path.size()), 5 * n - 16);
        Tree t = all[i];
        apply_all(t, path);
        EXPECT_TRUE(trees_equal(t, b));
      }
  }
}

TEST(MutationPath, CaterpillarReduction) {
  Rng rng(32);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 4 + rep % 20;
    Tree t = random_tree(n, rng);
    const auto steps = to_caterpillar(t);
    EXPECT_TRUE(is_caterpillar(t));
    EXPECT_LE(static_cast<int>(steps.size()), std::max(0, n - 4));
  }
}

TEST(MutationPath, MismatchedSizes) {
  Rng rng(33);
  EXPECT_THROW(mutation_path(random_tree(5, rng), random_tree(7, rng)), invalid_comparison_error);
}
