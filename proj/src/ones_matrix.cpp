#include "semitrans/ones_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "semitrans/pq_tree.hpp"

namespace semitrans {

RowPermutation RowPermutation::identity(int m) {
  RowPermutation p;
  p.order.resize(m);
  std::iota(p.order.begin(), p.order.end(), 0);
  return p;
}

bool RowPermutation::is_valid_for(int m) const {
  if (size() != m) return false;
  std::vector<char> seen(m, 0);
  for (int r : order) {
    if (r < 0 || r >= m || seen[r]) return false;
    seen[r] = 1;
  }
  return true;
}

std::string format_certificate(const std::optional<RowPermutation>& perm) {
  if (!perm) return "none";
  std::string out = "perm:";
  for (int r : perm->order) out += " " + std::to_string(r + 1);
  return out;
}

std::optional<RowPermutation> has_consecutive_ones(const BinaryMatrix& m) {
  const int rows = m.rows();
  if (m.empty()) return RowPermutation::identity(rows);

  std::vector<int> ones(m.cols());
  std::vector<int> columns;
  for (int c = 0; c < m.cols(); ++c) {
    ones[c] = m.column_ones(c);
    if (ones[c] > 1 && ones[c] < rows) columns.push_back(c);
  }
  std::stable_sort(columns.begin(), columns.end(),
                   [&](int a, int b) { return ones[a] > ones[b]; });

  PQTree tree(rows);
  std::vector<int> leaves;
  for (int c : columns) {
    leaves.clear();
    auto col = m.column(c);
    for (int r = 0; r < rows; ++r) {
      if (col[r]) leaves.push_back(r);
    }
    if (!tree.reduce(leaves)) return std::nullopt;
  }
  return RowPermutation{tree.frontier()};
}

BinaryMatrix tucker_transform(const BinaryMatrix& m) {
  if (m.rows() == 0) throw std::invalid_argument("tucker_transform needs at least one row");
  BinaryMatrix out = m;
  for (int c = 0; c < m.cols(); ++c) {
    auto col = out.column(c);
    if (col[0]) {
      for (auto& bit : col) bit ^= 1;
    }
  }
  return out;
}

std::optional<RowPermutation> has_circular_ones(const BinaryMatrix& m) {
  if (m.empty()) return RowPermutation::identity(m.rows());
  return has_consecutive_ones(tucker_transform(m));
}

std::vector<std::uint8_t> permuted_column(const BinaryMatrix& m, const RowPermutation& perm,
                                          int c) {
  auto col = m.column(c);
  std::vector<std::uint8_t> out(perm.order.size());
  for (std::size_t i = 0; i < perm.order.size(); ++i) out[i] = col[perm.order[i]];
  return out;
}

namespace {

void require_valid(const BinaryMatrix& m, const RowPermutation& perm) {
  if (!perm.is_valid_for(m.rows())) {
    throw std::invalid_argument("row permutation does not match the matrix");
  }
}

// Number of maximal runs of ones, treating the column as linear or cyclic.
int runs_of_ones(const BinaryMatrix& m, const RowPermutation& perm, int c, bool cyclic) {
  auto col = m.column(c);
  const int rows = m.rows();
  int runs = 0;
  for (int i = 0; i < rows; ++i) {
    if (!col[perm.order[i]]) continue;
    bool prev_one = i > 0 ? col[perm.order[i - 1]] != 0
                          : cyclic && col[perm.order[rows - 1]] != 0;
    if (!prev_one) ++runs;
  }
  return runs;
}

}  // namespace

bool check_c1p_under_perm(const BinaryMatrix& m, const RowPermutation& perm) {
  require_valid(m, perm);
  for (int c = 0; c < m.cols(); ++c) {
    if (runs_of_ones(m, perm, c, false) > 1) return false;
  }
  return true;
}

bool check_circ_under_perm(const BinaryMatrix& m, const RowPermutation& perm) {
  require_valid(m, perm);
  for (int c = 0; c < m.cols(); ++c) {
    if (runs_of_ones(m, perm, c, true) > 1) return false;
  }
  return true;
}

PermutationCount enumerate_valid_perms(const BinaryMatrix& m, OnesMode mode,
                                       const PermutationPredicate& extra, bool collect,
                                       int max_rows) {
  if (m.rows() > max_rows) {
    throw std::invalid_argument("permutation enumeration limited to " +
                                std::to_string(max_rows) + " rows");
  }
  PermutationCount result;
  RowPermutation perm = RowPermutation::identity(m.rows());
  do {
    bool ok = mode == OnesMode::Consecutive ? check_c1p_under_perm(m, perm)
                                            : check_circ_under_perm(m, perm);
    if (ok && extra) ok = extra(m, perm);
    if (ok) {
      ++result.count;
      if (collect) result.permutations.push_back(perm);
    }
  } while (std::next_permutation(perm.order.begin(), perm.order.end()));
  return result;
}

}  // namespace semitrans
