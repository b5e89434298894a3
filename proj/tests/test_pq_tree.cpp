#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semitrans/pq_tree.hpp"

namespace {

using semitrans::PQTree;

// Number of leaf orders a tree description stands for: k! per P-node with k
// children, 2 per Q-node.
std::uint64_t orders_of(const std::string& text, std::size_t& pos) {
  if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return 1;
  }
  const char kind = text[pos];
  pos += 2;  // "P(" or "Q("
  std::uint64_t total = 1;
  int children = 0;
  while (text[pos] != ')') {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    total *= orders_of(text, pos);
    ++children;
  }
  ++pos;
  if (kind == 'Q') return total * 2;
  for (int i = 2; i <= children; ++i) total *= i;
  return total;
}

std::uint64_t orders_of(const PQTree& tree) {
  std::size_t pos = 0;
  return orders_of(tree.to_string(), pos);
}

bool consecutive_in(const std::vector<int>& frontier, const std::vector<int>& set) {
  std::vector<int> where;
  for (int leaf : set) {
    where.push_back(static_cast<int>(std::find(frontier.begin(), frontier.end(), leaf) -
                                     frontier.begin()));
  }
  auto [lo, hi] = std::minmax_element(where.begin(), where.end());
  return *hi - *lo + 1 == static_cast<int>(set.size());
}

TEST(PQTree, FreshTreeIsOneP) {
  PQTree tree(4);
  EXPECT_EQ(tree.to_string(), "P(0 1 2 3)");
  EXPECT_EQ(orders_of(tree), 24u);
  EXPECT_TRUE(tree.well_formed());
}

TEST(PQTree, SingleLeafAndEmpty) {
  PQTree one(1);
  EXPECT_EQ(one.frontier(), std::vector<int>{0});
  int leaf = 0;
  EXPECT_TRUE(one.reduce(std::span<const int>(&leaf, 1)));
  PQTree none(0);
  EXPECT_TRUE(none.frontier().empty());
}

TEST(PQTree, ChainBuildsQNode) {
  PQTree tree(4);
  std::vector<std::vector<int>> sets{{0, 1}, {1, 2}, {2, 3}};
  for (const auto& s : sets) ASSERT_TRUE(tree.reduce(s));
  EXPECT_EQ(orders_of(tree), 2u);
  auto f = tree.frontier();
  EXPECT_TRUE(f == (std::vector<int>{0, 1, 2, 3}) || f == (std::vector<int>{3, 2, 1, 0}));
}

TEST(PQTree, TriangleOfPairsFails) {
  PQTree tree(3);
  ASSERT_TRUE(tree.reduce(std::vector<int>{0, 1}));
  ASSERT_TRUE(tree.reduce(std::vector<int>{1, 2}));
  EXPECT_FALSE(tree.reduce(std::vector<int>{0, 2}));
  EXPECT_FALSE(tree.valid());
  EXPECT_FALSE(tree.reduce(std::vector<int>{0, 1}));
}

TEST(PQTree, RejectsBadLeaf) {
  PQTree tree(3);
  EXPECT_THROW(tree.reduce(std::vector<int>{0, 3}), std::out_of_range);
}

// The tree must stand for exactly the orders keeping every set consecutive.
TEST(PQTree, OrderCountMatchesEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int sets = 1 + static_cast<int>(rng() % 6);
    PQTree tree(n);
    std::vector<std::vector<int>> applied;
    bool ok = true;
    for (int s = 0; s < sets && ok; ++s) {
      std::vector<int> set;
      for (int leaf = 0; leaf < n; ++leaf) {
        if (rng() % 2) set.push_back(leaf);
      }
      applied.push_back(set);
      ok = tree.reduce(set);
      if (ok) {
        ASSERT_TRUE(tree.well_formed()) << tree.to_string();
      }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t expected = 0;
    do {
      expected += std::all_of(applied.begin(), applied.end(), [&](const auto& set) {
        return set.empty() || consecutive_in(order, set);
      });
    } while (std::next_permutation(order.begin(), order.end()));
    if (!ok) {
      EXPECT_EQ(expected, 0u) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(orders_of(tree), expected) << "trial " << trial << ": " << tree.to_string();
    auto f = tree.frontier();
    for (const auto& set : applied) {
      if (!set.empty()) {
        EXPECT_TRUE(consecutive_in(f, set));
      }
    }
  }
}

TEST(PQTree, LargeIntervalFamily) {
  const int n = 500;
  std::mt19937_64 rng(3);
  std::vector<int> hidden(n);
  std::iota(hidden.begin(), hidden.end(), 0);
  std::shuffle(hidden.begin(), hidden.end(), rng);
  PQTree tree(n);
  std::vector<std::vector<int>> sets;
  for (int s = 0; s < 400; ++s) {
    int a = static_cast<int>(rng() % n), len = 2 + static_cast<int>(rng() % 30);
    std::vector<int> set(hidden.begin() + a, hidden.begin() + std::min(n, a + len));
    sets.push_back(set);
    ASSERT_TRUE(tree.reduce(set));
  }
  auto f = tree.frontier();
  for (const auto& set : sets) {
    EXPECT_TRUE(consecutive_in(f, set));
  }
  EXPECT_TRUE(tree.well_formed());
}

}  // namespace
