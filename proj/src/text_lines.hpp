#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace semitrans::detail {

struct Line {
  int number;
  std::string text;  // comment stripped, trimmed
};

// Non-blank lines with '#' comments removed.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      auto last = line.find_last_not_of(" \t\r");
      out.push_back({number, std::string(line.substr(first, last - first + 1))});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace semitrans::detail
