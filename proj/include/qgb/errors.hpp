#ifndef QGB_ERRORS_HPP
#define QGB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qgb {

/// Malformed input text. Carries the position and the set of tokens that
/// would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found)
      : std::runtime_error(format(line, column, expected, found)),
        line_(line),
        column_(column),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  static std::string format(int line, int column, const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string msg = std::to_string(line) + ":" + std::to_string(column) + ": expected ";
    if (expected.size() > 1) msg += "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += ", ";
      msg += expected[i];
    }
    return msg + " but found " + found;
  }

  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Well-formed input that does not make sense: unknown identifiers,
/// non-prime moduli, reducible Galois polynomials.
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A completion exceeded its basis-size or pair-count cap.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qgb

#endif  // QGB_ERRORS_HPP
