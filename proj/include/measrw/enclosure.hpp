#ifndef MEASRW_ENCLOSURE_HPP
#define MEASRW_ENCLOSURE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "measrw/expr.hpp"
#include "measrw/interval_arith.hpp"
#include "measrw/semantics.hpp"

namespace measrw {

/// sigma |-> constant + sum_t coeffs[t] * sigma(t), with each sigma(t)
/// ranging over boxes[t].
struct AffineForm {
  Rational constant;
  std::map<Token, Rational> coeffs;
  std::map<Token, Interval> boxes;

  Rational value(const TokenEnv& sigma) const;
};

struct NotAffine {
  std::string reason;
};

struct InfeasibleToken {
  Token token;
};

using AffineResult = std::variant<AffineForm, NotAffine, InfeasibleToken>;

/// Affine normalization: sums, differences, negation, and products or
/// quotients by subexpressions without measured leaves. A quotient by an
/// exact zero folds to 0.
AffineResult to_affine(const Expr& e);

/// A consistent environment under which `f` evaluates to `q`, when q lies
/// in the form's range. Starts from every token at its lower endpoint and
/// moves tokens toward the side that approaches q.
std::optional<TokenEnv> affine_witness(const AffineForm& f, const Rational& q);

struct Witness {
  TokenEnv env;
  Rational value;
};

struct EmptySet {};

/// Certified exact enclosure: every rational in `interval` is attained.
struct ExactInterval {
  enum class Basis { Affine, RationalNormalForm };

  Interval interval;
  AffineForm form;
  Basis basis = Basis::Affine;
};

/// Sampled under-approximation plus sound over-approximation.
struct UnknownEnclosure {
  std::vector<Witness> under;
  IntervalOrUnbounded over;
  bool truncated = false;
};

using EnclosureOutcome = std::variant<EmptySet, ExactInterval, UnknownEnclosure>;

/// Exact enclosure of an affine form. Boxes are non-empty by construction
/// (infeasible expressions never produce a form).
ExactInterval affine_enclosure(const AffineForm& f);

/// Interval arithmetic that treats every measured occurrence as
/// independent. Always contains the warranted enclosure.
IntervalOrUnbounded over_approx(const Expr& e);

struct SampleOptions {
  unsigned grid = 5;
  std::uint64_t budget = 100000;
};

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t planned, std::uint64_t budget)
      : std::runtime_error("sampling grid of " + std::to_string(planned) +
                           " environments exceeds budget " + std::to_string(budget)),
        planned_(planned) {}
  std::uint64_t planned() const { return planned_; }

private:
  std::uint64_t planned_;
};

/// Grid values for one token: lo, hi, then dyadic interior points
/// (midpoint, quarters, eighths, ...) until `count` values are produced.
/// Grids are nested: the first k values of a larger grid are the k-grid.
std::vector<Rational> grid_points(const Interval& box, unsigned count);

struct SampleRun {
  std::vector<Witness> samples;
  std::uint64_t planned = 0;
  bool truncated = false;
};

/// Enumerates consistent environments over the per-token grids: all
/// endpoint combinations first, then the rest, first token varying
/// fastest. Stops after `budget` environments and marks the run truncated.
SampleRun enumerate_samples(const Expr& e, const SampleOptions& opts);

/// As enumerate_samples, but throws BudgetExceeded instead of truncating.
std::vector<Witness> under_approx_samples(const Expr& e, const SampleOptions& opts);

EnclosureOutcome enclosure(const Expr& e, const SampleOptions& opts = {});

/// Why a value is known to lie outside an enclosure.
struct Certificate {
  enum class Kind { EmptySet, ExactEnclosure, OverApprox };
  Kind kind;
  std::optional<Interval> interval;

  bool excludes(const Rational& q) const { return kind == Kind::EmptySet || !interval->contains(q); }
};

struct MemberHolds {
  Witness witness;
};
struct MemberFails {
  Certificate certificate;
};
struct MemberUnknown {};

using Membership = std::variant<MemberHolds, MemberFails, MemberUnknown>;

Membership membership(const EnclosureOutcome& outcome, const Rational& q);
Membership membership(const Expr& e, const Rational& q, const SampleOptions& opts = {});

}  // namespace measrw

#endif  // MEASRW_ENCLOSURE_HPP
