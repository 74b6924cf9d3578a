#include "twodir/expr.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "twodir/errors.hpp"

namespace twodir {

struct Expr::Node {
  Kind kind;
  double value = 0.0;
  std::string text;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Expr::Kind kind, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    NodePtr n = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return n;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make_node(Expr::Kind::Add, lhs, term());
      else if (accept('-'))
        lhs = make_node(Expr::Kind::Subtract, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make_node(Expr::Kind::Multiply, lhs, unary());
      else if (accept('/'))
        lhs = make_node(Expr::Kind::Divide, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_node(Expr::Kind::Negate, unary());
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.') return number();
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      NodePtr arg = expression();
      expect(')');
      return make_node(Expr::Kind::Sqrt, arg);
    }
    fail(std::string("unknown token '") + c + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    std::size_t mantissa_digits = 0;
    while (p < text_.size() && is_digit(text_[p])) ++p, ++mantissa_digits;
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      while (p < text_.size() && is_digit(text_[p])) ++p, ++mantissa_digits;
    }
    if (mantissa_digits == 0) fail("malformed number");
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      std::size_t exp_start = q;
      while (q < text_.size() && is_digit(text_[q])) ++q;
      if (q == exp_start) {
        pos_ = q;
        fail("malformed exponent");
      }
      p = q;
    }

    auto n = std::make_shared<Expr::Node>();
    n->kind = Expr::Kind::Literal;
    n->text = std::string(text_.substr(start, p - start));
    const char* first = text_.data() + start;
    const char* last = text_.data() + p;
    auto [ptr, ec] = std::from_chars(first, last, n->value);
    if (ec != std::errc() || ptr != last || !std::isfinite(n->value)) fail("number out of range");
    pos_ = p;
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double eval_node(const Expr::Node& n) {
  switch (n.kind) {
    case Expr::Kind::Literal:
      return n.value;
    case Expr::Kind::Negate:
      return -eval_node(*n.lhs);
    case Expr::Kind::Add:
      return eval_node(*n.lhs) + eval_node(*n.rhs);
    case Expr::Kind::Subtract:
      return eval_node(*n.lhs) - eval_node(*n.rhs);
    case Expr::Kind::Multiply:
      return eval_node(*n.lhs) * eval_node(*n.rhs);
    case Expr::Kind::Divide: {
      const double num = eval_node(*n.lhs);
      const double den = eval_node(*n.rhs);
      if (den == 0.0) throw EvalError("division by zero");
      return num / den;
    }
    case Expr::Kind::Sqrt: {
      const double arg = eval_node(*n.lhs);
      if (arg < 0.0) throw EvalError("sqrt of negative value " + std::to_string(arg));
      return std::sqrt(arg);
    }
  }
  return 0.0;
}

std::string node_string(const Expr::Node& n) {
  switch (n.kind) {
    case Expr::Kind::Literal:
      return n.text;
    case Expr::Kind::Negate:
      return "(-" + node_string(*n.lhs) + ")";
    case Expr::Kind::Sqrt:
      return "sqrt(" + node_string(*n.lhs) + ")";
    case Expr::Kind::Add:
      return "(" + node_string(*n.lhs) + " + " + node_string(*n.rhs) + ")";
    case Expr::Kind::Subtract:
      return "(" + node_string(*n.lhs) + " - " + node_string(*n.rhs) + ")";
    case Expr::Kind::Multiply:
      return "(" + node_string(*n.lhs) + " * " + node_string(*n.rhs) + ")";
    case Expr::Kind::Divide:
      return "(" + node_string(*n.lhs) + " / " + node_string(*n.rhs) + ")";
  }
  return {};
}

}  // namespace

Expr::Kind Expr::kind() const { return root_->kind; }

std::string_view Expr::literal_text() const {
  return root_->kind == Kind::Literal ? std::string_view(root_->text) : std::string_view();
}

std::string Expr::to_string() const { return node_string(*root_); }

Expr parse_expr(std::string_view text) { return Expr(Parser(text).parse()); }

double eval_expr(const Expr& e) { return eval_node(e.root()); }

double evaluate(std::string_view text) { return eval_expr(parse_expr(text)); }

}  // namespace twodir
