#ifndef MEASRW_SYNTAX_HPP
#define MEASRW_SYNTAX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "measrw/expr.hpp"

namespace measrw {

class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, IntervalOrder };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  /// Byte offset into the parsed text.
  std::size_t position() const { return position_; }

private:
  Kind kind_;
  std::size_t position_;
};

/// Parses one expression. Whitespace and `#` line comments are ignored.
///
///   expr   := term (("+" | "-") term)*
///   term   := factor (("*" | "/") factor)*
///   factor := "-" factor | "(" expr ")" | leaf
///   leaf   := "exact" "(" rat "," ident ")"
///           | "meas" "(" ident "," "[" rat "," rat "]" "," ident ")"
Expr parse_expr(std::string_view text);

/// Canonical text. Inserts only the parentheses needed for
/// parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

}  // namespace measrw

#endif  // MEASRW_SYNTAX_HPP
