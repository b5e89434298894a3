#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semitrans {

/// Dense (0,1)-matrix with 0-based row/column indices and optional column
/// labels. Stored column-major since every algorithm here walks columns.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols);

  /// Each string is one row over {'0','1'}. Throws std::invalid_argument on
  /// ragged input or other characters.
  static BinaryMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BinaryMatrix from_rows(std::span<const std::string> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool at(int r, int c) const { return data_[index(r, c)] != 0; }
  void set(int r, int c, bool value) { data_[index(r, c)] = value ? 1 : 0; }

  std::span<const std::uint8_t> column(int c) const {
    return {data_.data() + static_cast<std::size_t>(c) * rows_,
            static_cast<std::size_t>(rows_)};
  }
  std::span<std::uint8_t> column(int c) {
    return {data_.data() + static_cast<std::size_t>(c) * rows_,
            static_cast<std::size_t>(rows_)};
  }
  int column_ones(int c) const;

  /// Empty when the matrix carries no labels; otherwise one per column.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Copies columns `which` (in that order), carrying labels along.
  BinaryMatrix select_columns(std::span<const int> which) const;

  std::vector<std::string> row_strings() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(c) * rows_ + r;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::string> labels_;
};

/// Matrix file: "m n" header then m lines of n characters over {0,1}.
/// Blank lines and '#' comments are skipped.
BinaryMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BinaryMatrix& m);

}  // namespace semitrans
