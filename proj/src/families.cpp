#include "measrw/families.hpp"

#include <cctype>

namespace measrw {

std::string to_string(Family f) {
  switch (f) {
    case Family::Cancellation: return "cancellation";
    case Family::Background: return "background";
    case Family::Division: return "division";
  }
  return "?";
}

std::string to_string(TokenMode m) { return m == TokenMode::Same ? "same" : "distinct"; }

Family parse_family(const std::string& s) {
  if (s == "cancellation") return Family::Cancellation;
  if (s == "background") return Family::Background;
  if (s == "division") return Family::Division;
  throw SpecError("unknown family '" + s + "' (expected cancellation, background or division)");
}

TokenMode parse_mode(const std::string& s) {
  if (s == "same") return TokenMode::Same;
  if (s == "distinct") return TokenMode::Distinct;
  throw SpecError("unknown mode '" + s + "' (expected same or distinct)");
}

Interval parse_interval_arg(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string::npos) throw SpecError("interval '" + std::string(text) + "' is not 'lo,hi'");
  try {
    return Interval(Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1)));
  } catch (const std::invalid_argument& ex) {
    throw SpecError("interval '" + std::string(text) + "': " + ex.what());
  }
}

void FamilySpec::validate() const {
  bool ident = !dim.tag.empty() && std::isalpha(static_cast<unsigned char>(dim.tag.front()));
  for (char c : dim.tag) ident = ident && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  if (!ident) throw SpecError("dimension tag '" + dim.tag + "' is not an identifier");
  switch (family) {
    case Family::Cancellation:
      if (!interval) throw SpecError("cancellation needs an interval");
      if (interval->degenerate()) throw SpecError("cancellation needs a nondegenerate interval (lo < hi)");
      break;
    case Family::Background:
      if (!signal || !background) throw SpecError("background needs signal and background intervals");
      if (background->degenerate())
        throw SpecError("background needs a nondegenerate background interval (lo < hi)");
      break;
    case Family::Division:
      if (!interval) throw SpecError("division needs an interval");
      if (interval->lo().sign() <= 0) throw SpecError("division needs a strictly positive interval (0 < lo)");
      if (interval->degenerate()) throw SpecError("division needs a nondegenerate interval (lo < hi)");
      break;
  }
}

RewritePair build_family(const FamilySpec& spec) {
  spec.validate();
  const bool same = spec.mode == TokenMode::Same;
  const Dim& d = spec.dim;
  auto m = [&](const char* tok, const Interval& i) { return Expr::meas(Token{tok}, i, d); };

  switch (spec.family) {
    case Family::Cancellation: {
      const Interval& i = *spec.interval;
      Expr src = same ? m("t", i) - m("t", i) : m("t1", i) - m("t2", i);
      return {src, Expr::exact(Rational(0), d)};
    }
    case Family::Background: {
      const Interval& is = *spec.signal;
      const Interval& ib = *spec.background;
      Expr src = same ? (m("ts", is) + m("tb", ib)) - m("tb", ib) : (m("ts", is) + m("tb1", ib)) - m("tb2", ib);
      return {src, m("ts", is)};
    }
    case Family::Division: {
      const Interval& i = *spec.interval;
      Expr src = same ? m("t", i) / m("t", i) : m("t1", i) / m("t2", i);
      return {src, Expr::exact(Rational(1), d)};
    }
  }
  throw SpecError("unknown family");
}

RewriteClass expected_class(TokenMode mode) {
  return mode == TokenMode::Same ? RewriteClass::Interchangeable : RewriteClass::OneWayOnlyForward;
}

DemoResult run_demo(const FamilySpec& spec, const SampleOptions& opts) {
  RewritePair pair = build_family(spec);
  FamilySpec same = spec, distinct = spec;
  same.mode = TokenMode::Same;
  distinct.mode = TokenMode::Distinct;
  Expr same_src = build_family(same).source;
  Expr distinct_src = build_family(distinct).source;

  Analyzed src = analyze(pair.source, opts);
  Analyzed tgt = analyze(pair.target, opts);
  return DemoResult{spec, pair, expected_class(spec.mode), classify(src, tgt),
                    blind_compare(same_src, distinct_src, pair.target, opts)};
}

}  // namespace measrw
