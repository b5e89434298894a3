#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semitrans/binary_matrix.hpp"

namespace semitrans {

/// Row order certificate: order[position] = row index (both 0-based).
struct RowPermutation {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  static RowPermutation identity(int m);
  bool is_valid_for(int m) const;
  friend bool operator==(const RowPermutation&, const RowPermutation&) = default;
};

/// "perm: p1 ... pm" with 1-based row indices, or "none".
std::string format_certificate(const std::optional<RowPermutation>& perm);

/// Row order making every column's ones contiguous, if one exists.
std::optional<RowPermutation> has_consecutive_ones(const BinaryMatrix& m);

/// Complements every column whose first-row entry is 1. Throws
/// std::invalid_argument for a matrix without rows.
BinaryMatrix tucker_transform(const BinaryMatrix& m);

/// Row order making every column's ones contiguous up to wrap-around. The
/// certificate is a consecutive-ones order of tucker_transform(m).
std::optional<RowPermutation> has_circular_ones(const BinaryMatrix& m);

/// Literal verifiers. Throw std::invalid_argument for a malformed perm.
bool check_c1p_under_perm(const BinaryMatrix& m, const RowPermutation& perm);
bool check_circ_under_perm(const BinaryMatrix& m, const RowPermutation& perm);

/// Column c under `perm` as a sequence of bits in position order.
std::vector<std::uint8_t> permuted_column(const BinaryMatrix& m, const RowPermutation& perm,
                                          int c);

enum class OnesMode { Consecutive, Circular };

struct PermutationCount {
  std::uint64_t count = 0;
  std::vector<RowPermutation> permutations;  // filled only when requested
};

using PermutationPredicate =
    std::function<bool(const BinaryMatrix&, const RowPermutation&)>;

/// Brute force over all m! row orders (lexicographic). Throws
/// std::invalid_argument when m exceeds max_rows.
PermutationCount enumerate_valid_perms(const BinaryMatrix& m, OnesMode mode,
                                       const PermutationPredicate& extra = {},
                                       bool collect = false, int max_rows = 8);

}  // namespace semitrans
