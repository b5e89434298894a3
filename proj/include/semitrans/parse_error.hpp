#pragma once

#include <stdexcept>
#include <string>

namespace semitrans {

/// Raised by the text readers; carries the 1-based line number of the
/// offending line (0 when the problem is not tied to a single line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace semitrans
