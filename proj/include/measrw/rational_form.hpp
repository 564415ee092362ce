#ifndef MEASRW_RATIONAL_FORM_HPP
#define MEASRW_RATIONAL_FORM_HPP

#include <cstddef>
#include <map>
#include <optional>

#include "measrw/expr.hpp"
#include "measrw/interval_arith.hpp"
#include "measrw/semantics.hpp"

namespace measrw {

using Monomial = std::map<Token, unsigned>;

/// Sparse multivariate polynomial over tokens with rational coefficients.
/// No stored coefficient is zero.
class Polynomial {
public:
  Polynomial() = default;
  static Polynomial constant(const Rational& q);
  static Polynomial variable(const Token& t);

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  unsigned degree() const;
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational eval(const TokenEnv& sigma) const;
  /// Sound enclosure of the polynomial's range over a box of token values.
  IntervalOrUnbounded range(const std::map<Token, Interval>& boxes) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& q) const;
  /// Divides every term by a monomial that divides all of them.
  Polynomial divided_by(const Monomial& m) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// num / den, where den is certified nonzero on every token-consistent
/// environment of the expression it came from.
struct RationalForm {
  Polynomial num;
  Polynomial den;
};

/// Normalizes `e` to a quotient of polynomials over the given boxes (the
/// effective intervals of `e`). Returns nullopt when some divisor cannot be
/// certified nonzero on the box or the term count exceeds `max_terms`.
std::optional<RationalForm> to_rational_form(const Expr& e, const std::map<Token, Interval>& boxes,
                                             std::size_t max_terms = 256);

}  // namespace measrw

#endif  // MEASRW_RATIONAL_FORM_HPP
