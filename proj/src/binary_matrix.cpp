#include "semitrans/binary_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "semitrans/parse_error.hpp"
#include "text_lines.hpp"

namespace semitrans {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix dimensions must be nonnegative");
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_rows(copy);
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string> rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  BinaryMatrix out(m, n);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int c = 0; c < n; ++c) {
      char ch = rows[r][c];
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
      out.set(r, c, ch == '1');
    }
  }
  return out;
}

int BinaryMatrix::column_ones(int c) const {
  auto col = column(c);
  return static_cast<int>(std::count(col.begin(), col.end(), std::uint8_t{1}));
}

void BinaryMatrix::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != cols_) {
    throw std::invalid_argument("label count must equal column count");
  }
  labels_ = std::move(labels);
}

BinaryMatrix BinaryMatrix::select_columns(std::span<const int> which) const {
  BinaryMatrix out(rows_, static_cast<int>(which.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < which.size(); ++i) {
    auto src = column(which[i]);
    std::copy(src.begin(), src.end(), out.column(static_cast<int>(i)).begin());
    if (!labels_.empty()) labels.push_back(labels_[which[i]]);
  }
  out.labels_ = std::move(labels);
  return out;
}

std::vector<std::string> BinaryMatrix::row_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (int c = 0; c < cols_; ++c) {
    for (int r = 0; r < rows_; ++r) {
      if (at(r, c)) out[r][c] = '1';
    }
  }
  return out;
}

BinaryMatrix parse_matrix(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line \"m n\"");
  long m = -1, n = -1;
  {
    std::istringstream header(lines[0].text);
    std::string extra;
    if (!(header >> m >> n) || (header >> extra) || m < 0 || n < 0) {
      throw ParseError(lines[0].number, "expected header \"m n\"");
    }
  }
  if (n == 0) {
    // Rows of a zero-width matrix are blank and therefore skipped.
    if (lines.size() > 1) {
      throw ParseError(lines[1].number, "unexpected row data for a matrix with 0 columns");
    }
    return BinaryMatrix(static_cast<int>(m), 0);
  }
  if (static_cast<long>(lines.size()) - 1 != m) {
    int at = lines.size() > static_cast<std::size_t>(m) + 1
                 ? lines[m + 1].number
                 : lines.back().number;
    throw ParseError(at, "expected " + std::to_string(m) + " matrix rows, found " +
                             std::to_string(lines.size() - 1));
  }
  BinaryMatrix out(static_cast<int>(m), static_cast<int>(n));
  for (long r = 0; r < m; ++r) {
    const auto& line = lines[r + 1];
    if (static_cast<long>(line.text.size()) != n) {
      throw ParseError(line.number, "row must have exactly " + std::to_string(n) +
                                        " characters");
    }
    for (long c = 0; c < n; ++c) {
      char ch = line.text[c];
      if (ch != '0' && ch != '1') {
        throw ParseError(line.number, std::string("invalid matrix entry '") + ch + "'");
      }
      out.set(static_cast<int>(r), static_cast<int>(c), ch == '1');
    }
  }
  return out;
}

std::string format_matrix(const BinaryMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const auto& row : m.row_strings()) {
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace semitrans
