#ifndef MEASRW_BLIND_HPP
#define MEASRW_BLIND_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "measrw/expr.hpp"
#include "measrw/interval_arith.hpp"
#include "measrw/rewrite.hpp"

namespace measrw {

struct BlindNode;

/// Token-erased expression: measured leaves keep only interval and tag.
class BlindExpr {
public:
  static BlindExpr exact(Rational q, Dim d);
  static BlindExpr meas(Interval i, Dim d);
  static BlindExpr binary(BinaryOp op, BlindExpr lhs, BlindExpr rhs);
  static BlindExpr neg(BlindExpr operand);

  const BlindNode& node() const { return *node_; }

  friend bool operator==(const BlindExpr& a, const BlindExpr& b);

private:
  explicit BlindExpr(std::shared_ptr<const BlindNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const BlindNode> node_;
};

struct BlindExact {
  Rational value;
  Dim dim;
};
struct BlindMeas {
  Interval interval;
  Dim dim;
};
struct BlindBinary {
  BinaryOp op;
  BlindExpr lhs;
  BlindExpr rhs;
};
struct BlindNeg {
  BlindExpr operand;
};

struct BlindNode {
  std::variant<BlindExact, BlindMeas, BlindBinary, BlindNeg> v;
};

BlindExpr forget_tokens(const Expr& e);

/// Compositional interval image; repeated leaves vary independently.
IntervalOrUnbounded blind_enclosure(const BlindExpr& b);

/// Prints in the expression grammar with the token slot shown as `_`.
std::string print_blind(const BlindExpr& b);

struct ComparisonReport {
  BlindExpr blind_first;
  BlindExpr blind_second;
  bool blind_equal = false;
  IntervalOrUnbounded blind_encl_first;
  IntervalOrUnbounded blind_encl_second;
  bool blind_enclosures_equal = false;

  // With a target: each expression classified against it.
  // Without: `first` holds classify(e1, e2) and `second` is empty.
  std::optional<Expr> target;
  Classification first;
  std::optional<Classification> second;

  bool classes_differ() const { return second && first.kind != second->kind; }
  /// Blind summaries agree while the token-sensitive classes differ.
  bool insufficiency_demonstrated() const { return blind_equal && blind_enclosures_equal && classes_differ(); }
};

ComparisonReport blind_compare(const Expr& e1, const Expr& e2, const std::optional<Expr>& target,
                               const SampleOptions& opts = {});

}  // namespace measrw

#endif  // MEASRW_BLIND_HPP
