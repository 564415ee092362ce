#include "measrw/blind.hpp"

namespace measrw {

BlindExpr BlindExpr::exact(Rational q, Dim d) {
  return BlindExpr(std::make_shared<const BlindNode>(BlindNode{BlindExact{std::move(q), std::move(d)}}));
}

BlindExpr BlindExpr::meas(Interval i, Dim d) {
  return BlindExpr(std::make_shared<const BlindNode>(BlindNode{BlindMeas{std::move(i), std::move(d)}}));
}

BlindExpr BlindExpr::binary(BinaryOp op, BlindExpr lhs, BlindExpr rhs) {
  return BlindExpr(std::make_shared<const BlindNode>(BlindNode{BlindBinary{op, std::move(lhs), std::move(rhs)}}));
}

BlindExpr BlindExpr::neg(BlindExpr operand) {
  return BlindExpr(std::make_shared<const BlindNode>(BlindNode{BlindNeg{std::move(operand)}}));
}

bool operator==(const BlindExpr& a, const BlindExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node().v;
  const auto& y = b.node().v;
  if (x.index() != y.index()) return false;
  if (auto* p = std::get_if<BlindExact>(&x)) {
    const auto& q = std::get<BlindExact>(y);
    return p->value == q.value && p->dim == q.dim;
  }
  if (auto* p = std::get_if<BlindMeas>(&x)) {
    const auto& q = std::get<BlindMeas>(y);
    return p->interval == q.interval && p->dim == q.dim;
  }
  if (auto* p = std::get_if<BlindBinary>(&x)) {
    const auto& q = std::get<BlindBinary>(y);
    return p->op == q.op && p->lhs == q.lhs && p->rhs == q.rhs;
  }
  return std::get<BlindNeg>(x).operand == std::get<BlindNeg>(y).operand;
}

BlindExpr forget_tokens(const Expr& e) {
  const auto& v = e.node().v;
  if (auto* x = std::get_if<ExactLeaf>(&v)) return BlindExpr::exact(x->value, x->dim);
  if (auto* m = std::get_if<MeasLeaf>(&v)) return BlindExpr::meas(m->interval, m->dim);
  if (auto* n = std::get_if<NegNode>(&v)) return BlindExpr::neg(forget_tokens(n->operand));
  const auto& b = std::get<BinaryNode>(v);
  return BlindExpr::binary(b.op, forget_tokens(b.lhs), forget_tokens(b.rhs));
}

IntervalOrUnbounded blind_enclosure(const BlindExpr& b) {
  const auto& v = b.node().v;
  if (auto* x = std::get_if<BlindExact>(&v)) return Interval::point(x->value);
  if (auto* m = std::get_if<BlindMeas>(&v)) return m->interval;
  if (auto* n = std::get_if<BlindNeg>(&v)) return range_neg(blind_enclosure(n->operand));
  const auto& bin = std::get<BlindBinary>(v);
  return range_apply(bin.op, blind_enclosure(bin.lhs), blind_enclosure(bin.rhs));
}

namespace {

int precedence(const BlindExpr& b) {
  const auto& v = b.node().v;
  if (auto* bin = std::get_if<BlindBinary>(&v))
    return (bin->op == BinaryOp::Add || bin->op == BinaryOp::Sub) ? 1 : 2;
  if (std::holds_alternative<BlindNeg>(v)) return 3;
  return 4;
}

void print_into(const BlindExpr& b, std::string& out) {
  auto child = [&out](const BlindExpr& c, bool parens) {
    if (parens) out += '(';
    print_into(c, out);
    if (parens) out += ')';
  };
  const auto& v = b.node().v;
  if (auto* x = std::get_if<BlindExact>(&v)) {
    out += "exact(" + x->value.str() + "," + x->dim.tag + ")";
  } else if (auto* m = std::get_if<BlindMeas>(&v)) {
    out += "meas(_," + m->interval.str() + "," + m->dim.tag + ")";
  } else if (auto* n = std::get_if<BlindNeg>(&v)) {
    out += '-';
    child(n->operand, precedence(n->operand) < 3);
  } else {
    const auto& bin = std::get<BlindBinary>(v);
    int p = precedence(b);
    child(bin.lhs, precedence(bin.lhs) < p);
    static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
    out += ops[static_cast<int>(bin.op)];
    child(bin.rhs, precedence(bin.rhs) <= p);
  }
}

}  // namespace

std::string print_blind(const BlindExpr& b) {
  std::string out;
  print_into(b, out);
  return out;
}

ComparisonReport blind_compare(const Expr& e1, const Expr& e2, const std::optional<Expr>& target,
                               const SampleOptions& opts) {
  BlindExpr b1 = forget_tokens(e1);
  BlindExpr b2 = forget_tokens(e2);
  auto r1 = blind_enclosure(b1);
  auto r2 = blind_enclosure(b2);
  bool same_encl = r1 == r2;
  Analyzed a1 = analyze(e1, opts);
  Analyzed a2 = analyze(e2, opts);

  if (target) {
    Analyzed t = analyze(*target, opts);
    return ComparisonReport{b1, b2, b1 == b2, r1, r2, same_encl, target, classify(a1, t), classify(a2, t)};
  }
  return ComparisonReport{b1, b2, b1 == b2, r1, r2, same_encl, std::nullopt, classify(a1, a2), std::nullopt};
}

}  // namespace measrw
