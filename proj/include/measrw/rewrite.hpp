#ifndef MEASRW_REWRITE_HPP
#define MEASRW_REWRITE_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "measrw/enclosure.hpp"

namespace measrw {

/// An expression together with its computed enclosure and blind
/// over-approximation, so both directions of a classification share work.
struct Analyzed {
  Expr expr;
  EnclosureOutcome encl;
  IntervalOrUnbounded over;
};

Analyzed analyze(const Expr& e, const SampleOptions& opts = {});

// Evidence that Encl(target) is contained in Encl(source).
struct Reflexive {};
struct VacuousTarget {};
struct IntervalContainment {
  Interval target;
  Interval source;
};
struct SourceWitness {
  Witness witness;  // source evaluates to the single target value
};
struct OverContainment {
  Interval target_over;
  Interval source;
};

using HoldsEvidence = std::variant<Reflexive, VacuousTarget, IntervalContainment, SourceWitness, OverContainment>;

struct VerdictHolds {
  HoldsEvidence evidence;
};

/// A target value, realized by `counterexample`, that `outside` proves is
/// not in the source enclosure.
struct VerdictFails {
  Witness counterexample;
  Certificate outside;
};

struct VerdictUnknown {
  std::string reason;
};

using Verdict3 = std::variant<VerdictHolds, VerdictFails, VerdictUnknown>;

inline bool holds(const Verdict3& v) { return std::holds_alternative<VerdictHolds>(v); }
inline bool fails(const Verdict3& v) { return std::holds_alternative<VerdictFails>(v); }

/// Decides Encl(target) ⊆ Encl(source) three-valuedly.
Verdict3 licensed(const Analyzed& source, const Analyzed& target);
Verdict3 licensed(const Expr& source, const Expr& target, const SampleOptions& opts = {});

enum class RewriteClass { Interchangeable, OneWayOnlyForward, OneWayOnlyBackward, Incomparable, Undetermined };

std::string to_string(RewriteClass c);

struct Classification {
  RewriteClass kind;
  Verdict3 forward;   // licensed(source, target)
  Verdict3 backward;  // licensed(target, source)
};

Classification classify(const Analyzed& source, const Analyzed& target);
Classification classify(const Expr& source, const Expr& target, const SampleOptions& opts = {});

class PreconditionViolated : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Self-test for exact expressions: classify agrees with comparing
/// exact values (Interchangeable when equal, Incomparable otherwise).
bool check_conservativity(const Expr& e, const Expr& e2);

/// Re-validates a verdict's evidence against freshly computed semantics:
/// witnesses are token-consistent and evaluate to their claimed values,
/// and every certificate matches the recomputed enclosure it cites.
bool audit_verdict(const Expr& source, const Expr& target, const Verdict3& v, const SampleOptions& opts = {});

}  // namespace measrw

#endif  // MEASRW_REWRITE_HPP
