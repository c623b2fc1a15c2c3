#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "soscert/polynomial.hpp"

namespace soscert {

/// Syntax error with a 1-based line/column position inside the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Canonical names x1..xn.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Parses expressions such as "x1^2 + 5*x1*x2 - 1", "3/4*x^2", "(x - 1)^3*(y + 2)".
/// Identifiers must appear in `names`; their position defines the variable index.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

}  // namespace soscert
