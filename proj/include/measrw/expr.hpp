#ifndef MEASRW_EXPR_HPP
#define MEASRW_EXPR_HPP

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include "measrw/rational.hpp"

namespace measrw {

// Identity of one observation event. Only equality matters to the
// semantics; the ordering exists so tokens can key ordered containers.
struct Token {
  std::string name;
  friend auto operator<=>(const Token&, const Token&) = default;
};

// Dimension tag. Carried by syntax, compared by equality, never evaluated.
struct Dim {
  std::string tag;
  friend auto operator<=>(const Dim&, const Dim&) = default;
};

class IntervalOrderError : public std::invalid_argument {
public:
  IntervalOrderError(const Rational& lo, const Rational& hi)
      : std::invalid_argument("interval [" + lo.str() + "," + hi.str() + "] has lo > hi") {}
};

/// Closed rational interval [lo, hi] with lo <= hi.
class Interval {
public:
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw IntervalOrderError(lo_, hi_);
  }
  static Interval point(const Rational& q) { return Interval(q, q); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool degenerate() const { return lo_ == hi_; }
  std::optional<Interval> intersect(const Interval& o) const;

  std::string str() const { return "[" + lo_.str() + "," + hi_.str() + "]"; }

  friend bool operator==(const Interval&, const Interval&) = default;

private:
  Rational lo_;
  Rational hi_;
};

enum class BinaryOp { Add, Sub, Mul, Div };

struct ExprNode;

/// Immutable expression tree over exact and measured leaves. Copies share
/// structure; equality is structural.
class Expr {
public:
  static Expr exact(Rational q, Dim d);
  static Expr meas(Token t, Interval i, Dim d);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr neg(Expr operand);

  const ExprNode& node() const { return *node_; }
  bool same_node(const Expr& o) const { return node_ == o.node_; }

  friend bool operator==(const Expr& a, const Expr& b);

private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct ExactLeaf {
  Rational value;
  Dim dim;
};

struct MeasLeaf {
  Token token;
  Interval interval;
  Dim dim;
};

struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};

struct NegNode {
  Expr operand;
};

struct ExprNode {
  std::variant<ExactLeaf, MeasLeaf, BinaryNode, NegNode> v;
};

inline Expr operator+(Expr a, Expr b) { return Expr::binary(BinaryOp::Add, std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return Expr::binary(BinaryOp::Sub, std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return Expr::binary(BinaryOp::Mul, std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return Expr::binary(BinaryOp::Div, std::move(a), std::move(b)); }
inline Expr operator-(Expr a) { return Expr::neg(std::move(a)); }

/// Per-token intersection of every interval declared for that token.
/// `infeasible` names the first token whose declarations do not overlap;
/// such an expression has an empty enclosure.
struct EffectiveIntervals {
  std::map<Token, Interval> boxes;
  std::optional<Token> infeasible;

  bool feasible() const { return !infeasible.has_value(); }
};

EffectiveIntervals effective_intervals(const Expr& e);

/// True iff no measured leaf occurs in `e`.
bool is_exact(const Expr& e);

std::set<Token> tokens_of(const Expr& e);
std::set<Dim> dims_of(const Expr& e);
std::size_t node_count(const Expr& e);

}  // namespace measrw

#endif  // MEASRW_EXPR_HPP
