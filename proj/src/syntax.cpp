#include "measrw/syntax.hpp"

#include <cctype>

namespace measrw {
namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(ParseError::Kind::Syntax, at,
                     "syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_letter(text_[pos_])) fail("expected identifier");
    while (pos_ < text_.size() && (is_letter(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits(const char* what) {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rat() {
    std::string text;
    if (accept('-')) text = "-";
    text += digits("digits");
    if (accept('/')) {
      skip();
      std::size_t at = pos_;
      std::string den = digits("denominator digits");
      if (den.find_first_not_of('0') == std::string::npos) fail_at(at, "zero denominator");
      text += "/" + den;
    }
    return Rational::parse(text);
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, factor());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    if (accept('-')) return Expr::neg(factor());
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    return leaf();
  }

  Expr leaf() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= text_.size() || !is_letter(text_[pos_])) fail("expected 'exact', 'meas', '-' or '('");
    std::string kw = ident();
    if (kw == "exact") {
      expect('(');
      Rational q = rat();
      expect(',');
      std::string dim = ident();
      expect(')');
      return Expr::exact(std::move(q), Dim{std::move(dim)});
    }
    if (kw == "meas") {
      expect('(');
      std::string tok = ident();
      expect(',');
      skip();
      std::size_t interval_at = pos_;
      expect('[');
      Rational lo = rat();
      expect(',');
      Rational hi = rat();
      expect(']');
      expect(',');
      std::string dim = ident();
      expect(')');
      if (hi < lo) {
        throw ParseError(ParseError::Kind::IntervalOrder, interval_at,
                         "interval [" + lo.str() + "," + hi.str() + "] has lo > hi");
      }
      return Expr::meas(Token{std::move(tok)}, Interval(lo, hi), Dim{std::move(dim)});
    }
    fail_at(at, "unknown leaf keyword '" + kw + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength: sums 1, products 2, negation 3, leaves 4.
int precedence(const Expr& e) {
  const auto& v = e.node().v;
  if (auto* b = std::get_if<BinaryNode>(&v))
    return (b->op == BinaryOp::Add || b->op == BinaryOp::Sub) ? 1 : 2;
  if (std::holds_alternative<NegNode>(v)) return 3;
  return 4;
}

void print_into(const Expr& e, std::string& out);

void print_child(const Expr& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(child, out);
  if (parens) out += ')';
}

void print_into(const Expr& e, std::string& out) {
  const auto& v = e.node().v;
  if (auto* x = std::get_if<ExactLeaf>(&v)) {
    out += "exact(" + x->value.str() + "," + x->dim.tag + ")";
  } else if (auto* m = std::get_if<MeasLeaf>(&v)) {
    out += "meas(" + m->token.name + "," + m->interval.str() + "," + m->dim.tag + ")";
  } else if (auto* n = std::get_if<NegNode>(&v)) {
    out += '-';
    print_child(n->operand, precedence(n->operand) < 3, out);
  } else {
    const auto& b = std::get<BinaryNode>(v);
    int p = precedence(e);
    print_child(b.lhs, precedence(b.lhs) < p, out);
    switch (b.op) {
      case BinaryOp::Add: out += " + "; break;
      case BinaryOp::Sub: out += " - "; break;
      case BinaryOp::Mul: out += " * "; break;
      case BinaryOp::Div: out += " / "; break;
    }
    print_child(b.rhs, precedence(b.rhs) <= p, out);
  }
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

}  // namespace measrw
