#include "measrw/enclosure.hpp"

#include <limits>

#include "measrw/rational_form.hpp"

namespace measrw {

Rational AffineForm::value(const TokenEnv& sigma) const {
  Rational v = constant;
  for (const auto& [t, c] : coeffs) v += c * sigma(t);
  return v;
}

namespace {

struct Linear {
  Rational constant;
  std::map<Token, Rational> coeffs;

  Linear& scale(const Rational& k) {
    constant *= k;
    for (auto& [t, c] : coeffs) c *= k;
    return *this;
  }
  Linear& add(const Linear& o, const Rational& sign) {
    constant += sign * o.constant;
    for (const auto& [t, c] : o.coeffs) coeffs[t] += sign * c;
    return *this;
  }
};

using LinearResult = std::variant<Linear, NotAffine>;

LinearResult linearize(const Expr& e) {
  const auto& v = e.node().v;
  if (auto* x = std::get_if<ExactLeaf>(&v)) return Linear{x->value, {}};
  if (auto* m = std::get_if<MeasLeaf>(&v)) return Linear{Rational(), {{m->token, Rational(1)}}};
  if (auto* n = std::get_if<NegNode>(&v)) {
    auto inner = linearize(n->operand);
    if (auto* l = std::get_if<Linear>(&inner)) l->scale(Rational(-1));
    return inner;
  }

  const auto& b = std::get<BinaryNode>(v);
  switch (b.op) {
    case BinaryOp::Add:
    case BinaryOp::Sub: {
      auto l = linearize(b.lhs);
      if (std::holds_alternative<NotAffine>(l)) return l;
      auto r = linearize(b.rhs);
      if (std::holds_alternative<NotAffine>(r)) return r;
      std::get<Linear>(l).add(std::get<Linear>(r), Rational(b.op == BinaryOp::Add ? 1 : -1));
      return l;
    }
    case BinaryOp::Mul: {
      if (auto k = exact_value(b.lhs)) {
        auto r = linearize(b.rhs);
        if (auto* lin = std::get_if<Linear>(&r)) lin->scale(*k);
        return r;
      }
      if (auto k = exact_value(b.rhs)) {
        auto l = linearize(b.lhs);
        if (auto* lin = std::get_if<Linear>(&l)) lin->scale(*k);
        return l;
      }
      return NotAffine{"product of two measured subexpressions"};
    }
    case BinaryOp::Div: {
      auto k = exact_value(b.rhs);
      if (!k) return NotAffine{"quotient with a measured divisor"};
      if (k->is_zero()) {
        // x / 0 = 0 whatever x is; the numerator's tokens stay with weight 0.
        Linear zero;
        for (const auto& t : tokens_of(b.lhs)) zero.coeffs[t] = Rational();
        return zero;
      }
      auto l = linearize(b.lhs);
      if (auto* lin = std::get_if<Linear>(&l)) lin->scale(Rational(1) / *k);
      return l;
    }
  }
  return NotAffine{"unreachable"};
}

}  // namespace

AffineResult to_affine(const Expr& e) {
  auto eff = effective_intervals(e);
  if (!eff.feasible()) return InfeasibleToken{*eff.infeasible};
  auto lin = linearize(e);
  if (auto* na = std::get_if<NotAffine>(&lin)) return *na;
  auto& l = std::get<Linear>(lin);
  return AffineForm{std::move(l.constant), std::move(l.coeffs), std::move(eff.boxes)};
}

ExactInterval affine_enclosure(const AffineForm& f) {
  Rational lo = f.constant;
  Rational hi = f.constant;
  for (const auto& [t, c] : f.coeffs) {
    const Interval& box = f.boxes.at(t);
    Rational a = c * box.lo();
    Rational b = c * box.hi();
    lo += min(a, b);
    hi += max(a, b);
  }
  return ExactInterval{Interval(lo, hi), f, ExactInterval::Basis::Affine};
}

std::optional<TokenEnv> affine_witness(const AffineForm& f, const Rational& q) {
  TokenEnv sigma;
  for (const auto& [t, box] : f.boxes) sigma.bind(t, box.lo());
  Rational delta = q - f.value(sigma);
  for (const auto& [t, c] : f.coeffs) {
    if (delta.is_zero()) break;
    // Only tokens whose weight has the sign of delta can close the gap
    // when moved up from their lower endpoint.
    if (c.sign() == 0 || c.sign() != delta.sign()) continue;
    const Interval& box = f.boxes.at(t);
    Rational reach = c * (box.hi() - box.lo());
    if (reach.abs() >= delta.abs()) {
      sigma.bind(t, box.lo() + delta / c);
      delta = Rational();
    } else {
      sigma.bind(t, box.hi());
      delta -= reach;
    }
  }
  if (!delta.is_zero()) return std::nullopt;
  return sigma;
}

IntervalOrUnbounded over_approx(const Expr& e) {
  const auto& v = e.node().v;
  if (auto* x = std::get_if<ExactLeaf>(&v)) return Interval::point(x->value);
  if (auto* m = std::get_if<MeasLeaf>(&v)) return m->interval;
  if (auto* n = std::get_if<NegNode>(&v)) return range_neg(over_approx(n->operand));
  const auto& b = std::get<BinaryNode>(v);
  return range_apply(b.op, over_approx(b.lhs), over_approx(b.rhs));
}

std::vector<Rational> grid_points(const Interval& box, unsigned count) {
  if (count < 2) throw std::invalid_argument("grid needs at least 2 points per token");
  if (box.degenerate()) return {box.lo()};
  std::vector<Rational> pts{box.lo(), box.hi()};
  Rational width = box.hi() - box.lo();
  for (std::int64_t denom = 2; pts.size() < count; denom *= 2) {
    for (std::int64_t j = 1; j < denom && pts.size() < count; j += 2)
      pts.push_back(box.lo() + width * Rational(j, denom));
  }
  return pts;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Odometer over index vectors, first position fastest.
bool advance(std::vector<std::size_t>& idx, const std::vector<std::size_t>& limits) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (++idx[i] < limits[i]) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

SampleRun enumerate_samples(const Expr& e, const SampleOptions& opts) {
  SampleRun run;
  auto eff = effective_intervals(e);
  if (!eff.feasible()) return run;

  std::vector<Token> toks;
  std::vector<std::vector<Rational>> pts;
  run.planned = 1;
  for (const auto& [t, box] : eff.boxes) {
    toks.push_back(t);
    pts.push_back(grid_points(box, opts.grid));
    run.planned = saturating_mul(run.planned, pts.back().size());
  }

  auto emit = [&](const std::vector<std::size_t>& idx) {
    if (run.samples.size() >= opts.budget) {
      run.truncated = true;
      return false;
    }
    TokenEnv sigma;
    for (std::size_t i = 0; i < toks.size(); ++i) sigma.bind(toks[i], pts[i][idx[i]]);
    if (token_consistent(sigma, e)) {
      Rational v = eval(sigma, e);
      run.samples.push_back({std::move(sigma), std::move(v)});
    }
    return true;
  };

  std::vector<std::size_t> full(pts.size()), ends(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    full[i] = pts[i].size();
    ends[i] = std::min<std::size_t>(2, full[i]);
  }

  std::vector<std::size_t> idx(pts.size(), 0);
  do {
    if (!emit(idx)) return run;
  } while (advance(idx, ends));

  std::fill(idx.begin(), idx.end(), 0);
  do {
    bool interior = false;
    for (std::size_t i = 0; i < idx.size(); ++i) interior |= idx[i] >= 2;
    if (interior && !emit(idx)) return run;
  } while (advance(idx, full));
  return run;
}

std::vector<Witness> under_approx_samples(const Expr& e, const SampleOptions& opts) {
  auto run = enumerate_samples(e, opts);
  if (run.truncated) throw BudgetExceeded(run.planned, opts.budget);
  return std::move(run.samples);
}

EnclosureOutcome enclosure(const Expr& e, const SampleOptions& opts) {
  auto affine = to_affine(e);
  if (std::holds_alternative<InfeasibleToken>(affine)) return EmptySet{};
  if (auto* f = std::get_if<AffineForm>(&affine)) return affine_enclosure(*f);

  auto eff = effective_intervals(e);
  if (auto rf = to_rational_form(e, eff.boxes); rf && rf->den.constant_value() && rf->num.degree() <= 1) {
    // The normal form's denominator is exactly 1 after simplification.
    AffineForm form{Rational(), {}, eff.boxes};
    for (const auto& [m, c] : rf->num.terms()) {
      if (m.empty()) {
        form.constant = c;
      } else {
        form.coeffs[m.begin()->first] = c;
      }
    }
    ExactInterval out = affine_enclosure(form);
    out.basis = ExactInterval::Basis::RationalNormalForm;
    return out;
  }

  auto run = enumerate_samples(e, opts);
  return UnknownEnclosure{std::move(run.samples), over_approx(e), run.truncated};
}

Membership membership(const EnclosureOutcome& outcome, const Rational& q) {
  if (std::holds_alternative<EmptySet>(outcome)) return MemberFails{{Certificate::Kind::EmptySet, std::nullopt}};
  if (auto* ex = std::get_if<ExactInterval>(&outcome)) {
    if (!ex->interval.contains(q)) return MemberFails{{Certificate::Kind::ExactEnclosure, ex->interval}};
    auto sigma = affine_witness(ex->form, q);
    if (!sigma) return MemberUnknown{};
    return MemberHolds{{std::move(*sigma), q}};
  }
  const auto& u = std::get<UnknownEnclosure>(outcome);
  for (const auto& w : u.under)
    if (w.value == q) return MemberHolds{w};
  if (auto* over = std::get_if<Interval>(&u.over); over && !over->contains(q))
    return MemberFails{{Certificate::Kind::OverApprox, *over}};
  return MemberUnknown{};
}

Membership membership(const Expr& e, const Rational& q, const SampleOptions& opts) {
  return membership(enclosure(e, opts), q);
}

}  // namespace measrw
