#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semitrans/binary_matrix.hpp"
#include "semitrans/ones_matrix.hpp"
#include "semitrans/parse_error.hpp"

namespace {

using namespace semitrans;

BinaryMatrix random_matrix(std::mt19937_64& rng, int m, int n, double density) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix out(m, n);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) out.set(r, c, bit(rng));
  }
  return out;
}

BinaryMatrix from_columns(int m, const std::vector<std::string>& cols) {
  BinaryMatrix out(m, static_cast<int>(cols.size()));
  for (int c = 0; c < out.cols(); ++c) {
    for (int r = 0; r < m; ++r) out.set(r, c, cols[c][r] == '1');
  }
  return out;
}

// k x (k+2): identity, then a column missing only the last row and one
// missing only the first.
BinaryMatrix example_matrix(int k) {
  BinaryMatrix out(k, k + 2);
  for (int r = 0; r < k; ++r) {
    out.set(r, r, true);
    out.set(r, k, r != k - 1);
    out.set(r, k + 1, r != 0);
  }
  return out;
}

TEST(MatrixIO, ParseAndFormatRoundTrip) {
  auto m = parse_matrix("# comment\n2 3\n101\n\n010\n");
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_TRUE(m.at(0, 2));
  EXPECT_FALSE(m.at(1, 0));
  EXPECT_EQ(format_matrix(m), "2 3\n101\n010\n");
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
}

TEST(MatrixIO, Errors) {
  EXPECT_THROW(parse_matrix("2 2\n10\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 2\n12\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 2\n101\n"), ParseError);
  EXPECT_THROW(parse_matrix("x\n"), ParseError);
  try {
    parse_matrix("2 2\n10\n1a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ConsecutiveOnes, Examples) {
  auto identity = BinaryMatrix::from_rows({"100", "010", "001"});
  auto perm = has_consecutive_ones(identity);
  ASSERT_TRUE(perm);
  EXPECT_TRUE(check_c1p_under_perm(identity, *perm));

  EXPECT_FALSE(has_consecutive_ones(BinaryMatrix::from_rows({"110", "011", "101"})));
  EXPECT_EQ(oracle::count_orders(BinaryMatrix::from_rows({"110", "011", "101"}), false), 0u);

  auto chain = from_columns(4, {"1100", "0110", "0011"});
  perm = has_consecutive_ones(chain);
  ASSERT_TRUE(perm);
  EXPECT_TRUE(check_c1p_under_perm(chain, RowPermutation::identity(4)));
  EXPECT_TRUE(check_c1p_under_perm(chain, *perm));
}

TEST(ConsecutiveOnes, EmptyMatrices) {
  EXPECT_EQ(has_consecutive_ones(BinaryMatrix(0, 3)), RowPermutation{});
  EXPECT_EQ(has_consecutive_ones(BinaryMatrix(3, 0)), RowPermutation::identity(3));
  EXPECT_EQ(has_circular_ones(BinaryMatrix(3, 0)), RowPermutation::identity(3));
  EXPECT_EQ(has_circular_ones(BinaryMatrix(0, 0)), RowPermutation{});
}

TEST(Tucker, Examples) {
  EXPECT_EQ(tucker_transform(BinaryMatrix::from_rows({"110", "011", "101"})),
            BinaryMatrix::from_rows({"000", "101", "011"}));
  auto zeros = BinaryMatrix(3, 2);
  EXPECT_EQ(tucker_transform(zeros), zeros);
  EXPECT_EQ(tucker_transform(BinaryMatrix::from_rows({"1"})), BinaryMatrix::from_rows({"0"}));
  EXPECT_THROW(tucker_transform(BinaryMatrix(0, 2)), std::invalid_argument);
}

TEST(CircularOnes, Examples) {
  auto m = BinaryMatrix::from_rows({"110", "011", "101"});
  auto perm = has_circular_ones(m);
  ASSERT_TRUE(perm);
  EXPECT_TRUE(check_circ_under_perm(m, *perm));
  EXPECT_TRUE(check_circ_under_perm(m, RowPermutation::identity(3)));

  auto chain = from_columns(4, {"1100", "0110", "0011"});
  EXPECT_TRUE(has_circular_ones(chain));
}

// Columns (1010) and (0101) are complementary, so the order 1,3,2,4 makes
// both of them consecutive.
TEST(CircularOnes, ComplementaryPairIsCircular) {
  auto m = from_columns(4, {"1010", "0101"});
  EXPECT_EQ(oracle::count_orders(m, true), 16u);
  auto perm = has_circular_ones(m);
  ASSERT_TRUE(perm);
  EXPECT_TRUE(check_circ_under_perm(m, *perm));
  EXPECT_TRUE(check_c1p_under_perm(m, RowPermutation{{0, 2, 1, 3}}));
}

TEST(CircularOnes, NotCircular) {
  // Three pairwise-crossing pairs on 4 rows plus their completions.
  auto m = from_columns(4, {"1100", "1010", "1001", "0110"});
  EXPECT_EQ(oracle::count_orders(m, true) > 0, has_circular_ones(m).has_value());
  auto k4 = from_columns(6, {"110000", "101000", "100100", "100010", "100001"});
  EXPECT_EQ(oracle::count_orders(k4, true), 0u);
  EXPECT_FALSE(has_circular_ones(k4));
}

TEST(Verifiers, LiteralChecks) {
  auto column = BinaryMatrix::from_rows({"1", "0", "1"});
  EXPECT_FALSE(check_c1p_under_perm(column, RowPermutation::identity(3)));
  EXPECT_TRUE(check_circ_under_perm(column, RowPermutation::identity(3)));
  EXPECT_TRUE(check_c1p_under_perm(column, RowPermutation{{1, 0, 2}}));
  EXPECT_THROW(check_c1p_under_perm(column, RowPermutation{{0, 0, 2}}), std::invalid_argument);
  EXPECT_THROW(check_circ_under_perm(column, RowPermutation{{0, 1}}), std::invalid_argument);
  EXPECT_EQ(permuted_column(column, RowPermutation{{1, 0, 2}}, 0),
            (std::vector<std::uint8_t>{0, 1, 1}));
}

TEST(Certificate, Format) {
  EXPECT_EQ(format_certificate(RowPermutation{{2, 0, 1}}), "perm: 3 1 2");
  EXPECT_EQ(format_certificate(std::nullopt), "none");
}

TEST(Enumeration, Counts) {
  auto one = BinaryMatrix::from_rows({"1"});
  EXPECT_EQ(enumerate_valid_perms(one, OnesMode::Consecutive).count, 1u);
  EXPECT_EQ(enumerate_valid_perms(one, OnesMode::Circular).count, 1u);
  EXPECT_EQ(enumerate_valid_perms(example_matrix(4), OnesMode::Circular).count, 24u);
  EXPECT_EQ(enumerate_valid_perms(example_matrix(5), OnesMode::Circular).count, 120u);
  EXPECT_THROW(enumerate_valid_perms(BinaryMatrix(9, 1), OnesMode::Circular),
               std::invalid_argument);

  auto collected = enumerate_valid_perms(from_columns(3, {"110"}), OnesMode::Consecutive, {}, true);
  EXPECT_EQ(collected.count, 4u);
  ASSERT_EQ(collected.permutations.size(), 4u);
  EXPECT_EQ(collected.permutations.front(), RowPermutation::identity(3));
}

TEST(Enumeration, ExtraPredicate) {
  auto m = example_matrix(4);
  auto first_row_first = [](const BinaryMatrix&, const RowPermutation& p) {
    return p.order[0] == 0;
  };
  EXPECT_EQ(enumerate_valid_perms(m, OnesMode::Circular, first_row_first).count, 6u);
}

// Exhaustive up to 4x4: the engines agree with plain enumeration, and every
// certificate they return verifies.
TEST(Engines, ExhaustiveSmall) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (m * n);
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        BinaryMatrix mat(m, n);
        for (int i = 0; i < m * n; ++i) mat.set(i % m, i / m, bits >> i & 1);
        auto c1p = has_consecutive_ones(mat);
        auto circ = has_circular_ones(mat);
        ASSERT_EQ(c1p.has_value(), oracle::count_orders(mat, false) > 0) << format_matrix(mat);
        ASSERT_EQ(circ.has_value(), oracle::count_orders(mat, true) > 0) << format_matrix(mat);
        if (c1p) {
          ASSERT_TRUE(check_c1p_under_perm(mat, *c1p));
        }
        if (circ) {
          ASSERT_TRUE(check_circ_under_perm(mat, *circ));
        }
      }
    }
  }
}

TEST(Engines, RandomAgainstEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 7);
    const int n = 1 + static_cast<int>(rng() % 7);
    auto mat = random_matrix(rng, m, n, 0.2 + 0.6 * (rng() % 100) / 100.0);
    auto c1p = has_consecutive_ones(mat);
    auto circ = has_circular_ones(mat);
    ASSERT_EQ(c1p.has_value(), oracle::count_orders(mat, false) > 0) << format_matrix(mat);
    ASSERT_EQ(circ.has_value(), oracle::count_orders(mat, true) > 0) << format_matrix(mat);
    if (c1p) {
      ASSERT_TRUE(check_c1p_under_perm(mat, *c1p));
    }
    if (circ) {
      ASSERT_TRUE(check_circ_under_perm(mat, *circ));
      ASSERT_TRUE(check_c1p_under_perm(tucker_transform(mat), *circ));
    }
    ASSERT_EQ(circ.has_value(), has_consecutive_ones(tucker_transform(mat)).has_value());
    ASSERT_EQ(enumerate_valid_perms(mat, OnesMode::Circular).count,
              oracle::count_orders(mat, true));
  }
}

TEST(Engines, ColumnOrderAndRedundantColumns) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 10);
    const int n = 1 + static_cast<int>(rng() % 10);
    auto mat = random_matrix(rng, m, n, 0.4);
    const bool c1p = has_consecutive_ones(mat).has_value();
    const bool circ = has_circular_ones(mat).has_value();

    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    auto shuffled = mat.select_columns(cols);
    EXPECT_EQ(has_consecutive_ones(shuffled).has_value(), c1p);
    EXPECT_EQ(has_circular_ones(shuffled).has_value(), circ);

    // Duplicate one column and add a single-one column.
    cols.push_back(cols.front());
    auto padded = mat.select_columns(cols);
    BinaryMatrix extended(m, padded.cols() + 1);
    for (int c = 0; c < padded.cols(); ++c) {
      for (int r = 0; r < m; ++r) extended.set(r, c, padded.at(r, c));
    }
    extended.set(static_cast<int>(rng() % m), padded.cols(), true);
    EXPECT_EQ(has_consecutive_ones(extended).has_value(), c1p);
    EXPECT_EQ(has_circular_ones(extended).has_value(), circ);
  }
}

TEST(Engines, LargePlantedOrders) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 300, n = 200;
    std::vector<int> hidden(m);
    std::iota(hidden.begin(), hidden.end(), 0);
    std::shuffle(hidden.begin(), hidden.end(), rng);
    BinaryMatrix mat(m, n);
    for (int c = 0; c < n; ++c) {
      int a = static_cast<int>(rng() % m), len = 1 + static_cast<int>(rng() % (m - 1));
      for (int i = 0; i < len; ++i) mat.set(hidden[(a + i) % m], c, true);
    }
    auto circ = has_circular_ones(mat);
    ASSERT_TRUE(circ);
    EXPECT_TRUE(check_circ_under_perm(mat, *circ));
  }
}

}  // namespace
