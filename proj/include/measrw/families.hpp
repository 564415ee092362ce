#ifndef MEASRW_FAMILIES_HPP
#define MEASRW_FAMILIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "measrw/blind.hpp"
#include "measrw/rewrite.hpp"

namespace measrw {

enum class Family { Cancellation, Background, Division };
enum class TokenMode { Same, Distinct };

std::string to_string(Family f);
std::string to_string(TokenMode m);
Family parse_family(const std::string& s);
TokenMode parse_mode(const std::string& s);

class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One instance of a rewrite family.
///   cancellation: m(I) - m(I)           -> exact(0)
///   background:   (m(Is) + m(Ib)) - m(Ib) -> m(Is)
///   division:     m(I) / m(I)           -> exact(1)
/// Same mode reuses one token for the repeated leaf; distinct mode uses
/// fresh tokens (t1, t2 or tb1, tb2).
struct FamilySpec {
  Family family = Family::Cancellation;
  TokenMode mode = TokenMode::Same;
  std::optional<Interval> interval;    // cancellation, division
  std::optional<Interval> signal;      // background
  std::optional<Interval> background;  // background
  Dim dim{"d"};

  /// Throws SpecError: cancellation needs lo < hi, background needs both
  /// intervals with a nondegenerate background, division needs 0 < lo < hi.
  void validate() const;
};

struct RewritePair {
  Expr source;
  Expr target;
};

/// Parses `lo,hi` or `[lo,hi]` with rational endpoints. Throws SpecError.
Interval parse_interval_arg(std::string_view text);

RewritePair build_family(const FamilySpec& spec);

RewriteClass expected_class(TokenMode mode);

struct DemoResult {
  FamilySpec spec;
  RewritePair pair;
  RewriteClass expected;
  Classification computed;
  /// Same-mode vs distinct-mode variant against the shared target.
  ComparisonReport blind;

  bool matches() const { return computed.kind == expected; }
};

DemoResult run_demo(const FamilySpec& spec, const SampleOptions& opts = {});

}  // namespace measrw

#endif  // MEASRW_FAMILIES_HPP
