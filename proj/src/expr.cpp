#include "measrw/expr.hpp"

namespace measrw {

std::optional<Interval> Interval::intersect(const Interval& o) const {
  const Rational& lo = max(lo_, o.lo_);
  const Rational& hi = min(hi_, o.hi_);
  if (hi < lo) return std::nullopt;
  return Interval(lo, hi);
}

Expr Expr::exact(Rational q, Dim d) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{ExactLeaf{std::move(q), std::move(d)}}));
}

Expr Expr::meas(Token t, Interval i, Dim d) {
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{MeasLeaf{std::move(t), std::move(i), std::move(d)}}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}

Expr Expr::neg(Expr operand) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{NegNode{std::move(operand)}}));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node().v;
  const auto& y = b.node().v;
  if (x.index() != y.index()) return false;
  if (auto* p = std::get_if<ExactLeaf>(&x)) {
    const auto& q = std::get<ExactLeaf>(y);
    return p->value == q.value && p->dim == q.dim;
  }
  if (auto* p = std::get_if<MeasLeaf>(&x)) {
    const auto& q = std::get<MeasLeaf>(y);
    return p->token == q.token && p->interval == q.interval && p->dim == q.dim;
  }
  if (auto* p = std::get_if<BinaryNode>(&x)) {
    const auto& q = std::get<BinaryNode>(y);
    return p->op == q.op && p->lhs == q.lhs && p->rhs == q.rhs;
  }
  return std::get<NegNode>(x).operand == std::get<NegNode>(y).operand;
}

namespace {

template <typename Leaf>
void for_each_leaf(const Expr& e, const Leaf& visit) {
  const auto& v = e.node().v;
  if (auto* b = std::get_if<BinaryNode>(&v)) {
    for_each_leaf(b->lhs, visit);
    for_each_leaf(b->rhs, visit);
  } else if (auto* n = std::get_if<NegNode>(&v)) {
    for_each_leaf(n->operand, visit);
  } else {
    visit(v);
  }
}

}  // namespace

EffectiveIntervals effective_intervals(const Expr& e) {
  EffectiveIntervals out;
  for_each_leaf(e, [&](const auto& leaf) {
    if (out.infeasible) return;
    auto* m = std::get_if<MeasLeaf>(&leaf);
    if (!m) return;
    auto it = out.boxes.find(m->token);
    if (it == out.boxes.end()) {
      out.boxes.emplace(m->token, m->interval);
      return;
    }
    if (auto meet = it->second.intersect(m->interval)) {
      it->second = *meet;
    } else {
      out.infeasible = m->token;
    }
  });
  return out;
}

bool is_exact(const Expr& e) {
  bool exact = true;
  for_each_leaf(e, [&](const auto& leaf) {
    if (std::holds_alternative<MeasLeaf>(leaf)) exact = false;
  });
  return exact;
}

std::set<Token> tokens_of(const Expr& e) {
  std::set<Token> out;
  for_each_leaf(e, [&](const auto& leaf) {
    if (auto* m = std::get_if<MeasLeaf>(&leaf)) out.insert(m->token);
  });
  return out;
}

std::set<Dim> dims_of(const Expr& e) {
  std::set<Dim> out;
  for_each_leaf(e, [&](const auto& leaf) {
    if (auto* m = std::get_if<MeasLeaf>(&leaf)) out.insert(m->dim);
    if (auto* x = std::get_if<ExactLeaf>(&leaf)) out.insert(x->dim);
  });
  return out;
}

std::size_t node_count(const Expr& e) {
  const auto& v = e.node().v;
  if (auto* b = std::get_if<BinaryNode>(&v)) return 1 + node_count(b->lhs) + node_count(b->rhs);
  if (auto* n = std::get_if<NegNode>(&v)) return 1 + node_count(n->operand);
  return 1;
}

}  // namespace measrw
