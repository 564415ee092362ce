#ifndef MEASRW_INTERVAL_ARITH_HPP
#define MEASRW_INTERVAL_ARITH_HPP

#include <string>
#include <variant>

#include "measrw/expr.hpp"

namespace measrw {

struct Unbounded {
  friend bool operator==(const Unbounded&, const Unbounded&) = default;
};

/// Result of compositional interval arithmetic. Unbounded arises only from
/// a nondegenerate divisor interval that touches 0.
using IntervalOrUnbounded = std::variant<Interval, Unbounded>;

inline bool is_bounded(const IntervalOrUnbounded& r) { return std::holds_alternative<Interval>(r); }
inline bool range_contains(const IntervalOrUnbounded& r, const Rational& q) {
  auto* i = std::get_if<Interval>(&r);
  return !i || i->contains(q);
}
std::string range_str(const IntervalOrUnbounded& r);

IntervalOrUnbounded range_add(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b);
IntervalOrUnbounded range_sub(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b);
IntervalOrUnbounded range_mul(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b);
/// Image under total division: a [0,0] divisor gives [0,0].
IntervalOrUnbounded range_div(const IntervalOrUnbounded& a, const IntervalOrUnbounded& b);
IntervalOrUnbounded range_neg(const IntervalOrUnbounded& a);
IntervalOrUnbounded range_apply(BinaryOp op, const IntervalOrUnbounded& a, const IntervalOrUnbounded& b);

}  // namespace measrw

#endif  // MEASRW_INTERVAL_ARITH_HPP
