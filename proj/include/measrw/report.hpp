#ifndef MEASRW_REPORT_HPP
#define MEASRW_REPORT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "measrw/blind.hpp"
#include "measrw/families.hpp"
#include "measrw/rewrite.hpp"

namespace measrw {

using Json = nlohmann::ordered_json;

enum class Outcome { Decided, Undetermined, BudgetExceeded };

/// One or more JSON records (one per output line) plus the outcome that
/// determines the CLI exit code.
struct Report {
  std::vector<Json> records;
  Outcome outcome = Outcome::Decided;

  std::string render(bool pretty) const;
};

struct ReportOptions {
  SampleOptions sampling;
  bool dim_lint = false;
};

/// Thrown when a witness or certificate in a report fails re-validation.
class AuditFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

Json to_json(const Interval& i);
Json to_json(const IntervalOrUnbounded& r);
Json to_json(const TokenEnv& sigma);
Json to_json(const Witness& w);
Json to_json(const EnclosureOutcome& e);
Json to_json(const Verdict3& v);
Json to_json(const Classification& c);

Report eval_report(const Expr& e, const TokenEnv& sigma);
Report enclosure_report(const Expr& e, const ReportOptions& opts);
Report classify_report(const Expr& source, const Expr& target, const ReportOptions& opts);
Report blind_report(const Expr& e1, const Expr& e2, const std::optional<Expr>& target, const ReportOptions& opts);
Report demo_report(const FamilySpec& spec, const ReportOptions& opts);
/// Header record, one record per sampled environment, then a summary.
Report oracle_report(const Expr& e, const ReportOptions& opts);

}  // namespace measrw

#endif  // MEASRW_REPORT_HPP
