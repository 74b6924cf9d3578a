#pragma once

// Arithmetic expressions for mask coefficients, e.g. "(93-13*sqrt(31))/(640*sqrt(2))".
//
// Grammar (whitespace between tokens is ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := number | 'sqrt' '(' expr ')' | '(' expr ')'
//   number  := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]  |  '.' digits [...]

#include <memory>
#include <string>
#include <string_view>

namespace twodir {

class Expr {
public:
  enum class Kind { Literal, Negate, Add, Subtract, Multiply, Divide, Sqrt };

  struct Node;

  Kind kind() const;
  /// Source text of a literal node; empty for other kinds.
  std::string_view literal_text() const;
  /// Printable, fully parenthesized form; mostly useful in test failure output.
  std::string to_string() const;

  const Node& root() const { return *root_; }

private:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;

  friend Expr parse_expr(std::string_view text);
};

/// Throws ParseError with the byte offset of the first offending character.
Expr parse_expr(std::string_view text);

/// Evaluates in double precision. Throws EvalError on division by zero or the
/// square root of a negative value.
double eval_expr(const Expr& e);

/// parse_expr followed by eval_expr.
double evaluate(std::string_view text);

}  // namespace twodir
