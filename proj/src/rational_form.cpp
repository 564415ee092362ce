#include "measrw/rational_form.hpp"

#include <algorithm>

namespace measrw {

Polynomial Polynomial::constant(const Rational& q) {
  Polynomial p;
  p.add_term({}, q);
  return p;
}

Polynomial Polynomial::variable(const Token& t) {
  Polynomial p;
  p.add_term({{t, 1u}}, Rational(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned md = 0;
    for (const auto& [t, k] : m) md += k;
    d = std::max(d, md);
  }
  return d;
}

namespace {

Rational power(Rational x, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

Interval interval_power(const Interval& i, unsigned k) {
  Rational a = power(i.lo(), k);
  Rational b = power(i.hi(), k);
  Rational hi = max(a, b);
  if (k % 2 == 0 && i.contains(Rational())) return Interval(Rational(), hi);
  return Interval(min(a, b), hi);
}

}  // namespace

Rational Polynomial::eval(const TokenEnv& sigma) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational prod = c;
    for (const auto& [t, k] : m) prod *= power(sigma(t), k);
    sum += prod;
  }
  return sum;
}

IntervalOrUnbounded Polynomial::range(const std::map<Token, Interval>& boxes) const {
  IntervalOrUnbounded sum = Interval::point(Rational());
  for (const auto& [m, c] : terms_) {
    IntervalOrUnbounded prod = Interval::point(c);
    for (const auto& [t, k] : m) {
      auto box = boxes.find(t);
      if (box == boxes.end()) return Unbounded{};
      prod = range_mul(prod, interval_power(box->second, k));
    }
    sum = range_add(sum, prod);
  }
  return sum;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [t, k] : mb) m[t] += k;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& q) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * q);
  return r;
}

Polynomial Polynomial::divided_by(const Monomial& d) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial out = m;
    for (const auto& [t, k] : d) {
      out[t] -= k;
      if (out[t] == 0) out.erase(t);
    }
    r.add_term(out, c);
  }
  return r;
}

namespace {

// Largest monomial dividing every term of both polynomials.
Monomial common_monomial(const Polynomial& a, const Polynomial& b) {
  std::optional<Monomial> g;
  auto fold = [&](const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      if (!g) {
        g = m;
        continue;
      }
      Monomial next;
      for (const auto& [t, k] : *g) {
        auto it = m.find(t);
        if (it != m.end()) next[t] = std::min(k, it->second);
      }
      g = std::move(next);
    }
  };
  fold(a);
  fold(b);
  return g.value_or(Monomial{});
}

RationalForm simplify(RationalForm f) {
  if (f.num.is_zero()) return {Polynomial(), Polynomial::constant(Rational(1))};
  // The denominator is nonzero on the box, so every factor of it is too and
  // cancelling a shared factor preserves the value.
  Monomial g = common_monomial(f.num, f.den);
  if (!g.empty()) {
    f.num = f.num.divided_by(g);
    f.den = f.den.divided_by(g);
  }
  if (auto c = f.den.constant_value()) {
    return {f.num.scaled(Rational(1) / *c), Polynomial::constant(Rational(1))};
  }
  const auto& [lead, dc] = *f.den.terms().begin();
  auto it = f.num.terms().find(lead);
  if (it != f.num.terms().end()) {
    Rational ratio = it->second / dc;
    if (f.num == f.den.scaled(ratio)) return {Polynomial::constant(ratio), Polynomial::constant(Rational(1))};
  }
  return f;
}

class Normalizer {
public:
  Normalizer(const std::map<Token, Interval>& boxes, std::size_t max_terms)
      : boxes_(boxes), max_terms_(max_terms) {}

  std::optional<RationalForm> run(const Expr& e) {
    const auto& v = e.node().v;
    if (auto* x = std::get_if<ExactLeaf>(&v))
      return RationalForm{Polynomial::constant(x->value), Polynomial::constant(Rational(1))};
    if (auto* m = std::get_if<MeasLeaf>(&v))
      return RationalForm{Polynomial::variable(m->token), Polynomial::constant(Rational(1))};
    if (auto* n = std::get_if<NegNode>(&v)) {
      auto inner = run(n->operand);
      if (!inner) return std::nullopt;
      return RationalForm{-inner->num, inner->den};
    }
    const auto& b = std::get<BinaryNode>(v);
    auto l = run(b.lhs);
    if (!l) return std::nullopt;
    auto r = run(b.rhs);
    if (!r) return std::nullopt;

    RationalForm out;
    switch (b.op) {
      case BinaryOp::Add:
      case BinaryOp::Sub: {
        Polynomial rn = b.op == BinaryOp::Add ? r->num : -r->num;
        if (l->den == r->den) {
          out = {l->num + rn, l->den};
        } else {
          out = {l->num * r->den + rn * l->den, l->den * r->den};
        }
        break;
      }
      case BinaryOp::Mul:
        out = {l->num * r->num, l->den * r->den};
        break;
      case BinaryOp::Div: {
        if (r->num.is_zero()) {
          out = {Polynomial(), Polynomial::constant(Rational(1))};
          break;
        }
        if (!r->num.constant_value()) {
          auto range = r->num.range(boxes_);
          if (range_contains(range, Rational())) return std::nullopt;
        }
        out = {l->num * r->den, l->den * r->num};
        break;
      }
    }
    out = simplify(std::move(out));
    if (out.num.size() + out.den.size() > max_terms_) return std::nullopt;
    return out;
  }

private:
  const std::map<Token, Interval>& boxes_;
  std::size_t max_terms_;
};

}  // namespace

std::optional<RationalForm> to_rational_form(const Expr& e, const std::map<Token, Interval>& boxes,
                                             std::size_t max_terms) {
  return Normalizer(boxes, max_terms).run(e);
}

}  // namespace measrw
