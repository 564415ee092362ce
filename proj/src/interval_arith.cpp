#include "measrw/interval_arith.hpp"

#include <algorithm>
#include <array>

namespace measrw {

std::string range_str(const IntervalOrUnbounded& r) {
  if (auto* i = std::get_if<Interval>(&r)) return i->str();
  return "unbounded";
}

namespace {

Interval hull(std::array<Rational, 4> xs) {
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return Interval(*lo, *hi);
}

}  // namespace

IntervalOrUnbounded range_add(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b) {
  auto* x = std::get_if<Interval>(&a);
  auto* y = std::get_if<Interval>(&b);
  if (!x || !y) return Unbounded{};
  return Interval(x->lo() + y->lo(), x->hi() + y->hi());
}

IntervalOrUnbounded range_sub(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b) {
  auto* x = std::get_if<Interval>(&a);
  auto* y = std::get_if<Interval>(&b);
  if (!x || !y) return Unbounded{};
  return Interval(x->lo() - y->hi(), x->hi() - y->lo());
}

IntervalOrUnbounded range_mul(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b) {
  auto* x = std::get_if<Interval>(&a);
  auto* y = std::get_if<Interval>(&b);
  if (!x || !y) return Unbounded{};
  return hull({x->lo() * y->lo(), x->lo() * y->hi(), x->hi() * y->lo(), x->hi() * y->hi()});
}

IntervalOrUnbounded range_div(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b) {
  auto* x = std::get_if<Interval>(&a);
  auto* y = std::get_if<Interval>(&b);
  if (!x || !y) return Unbounded{};
  if (y->lo().is_zero() && y->hi().is_zero()) return Interval::point(Rational());
  if (y->contains(Rational())) return Unbounded{};
  return hull({x->lo() / y->lo(), x->lo() / y->hi(), x->hi() / y->lo(), x->hi() / y->hi()});
}

IntervalOrUnbounded range_neg(const IntervalOrUnbounded& a) {
  auto* x = std::get_if<Interval>(&a);
  if (!x) return Unbounded{};
  return Interval(-x->hi(), -x->lo());
}

IntervalOrUnbounded range_apply(BinaryOp op, const IntervalOrUnbounded& a, const IntervalOrUnbounded& b) {
  switch (op) {
    case BinaryOp::Add: return range_add(a, b);
    case BinaryOp::Sub: return range_sub(a, b);
    case BinaryOp::Mul: return range_mul(a, b);
    case BinaryOp::Div: return range_div(a, b);
  }
  return Unbounded{};
}

}  // namespace measrw
