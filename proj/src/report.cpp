#include "measrw/report.hpp"

#include "measrw/syntax.hpp"

namespace measrw {

std::string Report::render(bool pretty) const {
  std::string out;
  for (const auto& r : records) {
    out += pretty ? r.dump(2) : r.dump();
    out += '\n';
  }
  return out;
}

Json to_json(const Interval& i) { return Json{{"lo", i.lo().str()}, {"hi", i.hi().str()}}; }

Json to_json(const IntervalOrUnbounded& r) {
  if (auto* i = std::get_if<Interval>(&r)) return to_json(*i);
  return "unbounded";
}

Json to_json(const TokenEnv& sigma) {
  Json j = Json::object();
  for (const auto& [t, v] : sigma.bindings()) j[t.name] = v.str();
  return j;
}

Json to_json(const Witness& w) { return Json{{"env", to_json(w.env)}, {"value", w.value.str()}}; }

Json to_json(const EnclosureOutcome& e) {
  if (std::holds_alternative<EmptySet>(e)) return Json{{"kind", "EmptySet"}};
  if (auto* x = std::get_if<ExactInterval>(&e)) {
    return Json{{"kind", "ExactInterval"},
                {"interval", to_json(x->interval)},
                {"basis", x->basis == ExactInterval::Basis::Affine ? "affine" : "rational-normal-form"}};
  }
  const auto& u = std::get<UnknownEnclosure>(e);
  Json j{{"kind", "Unknown"}, {"over", to_json(u.over)}};
  if (!u.under.empty()) {
    Rational lo = u.under.front().value, hi = lo;
    for (const auto& w : u.under) {
      lo = min(lo, w.value);
      hi = max(hi, w.value);
    }
    j["under_hull"] = to_json(Interval(lo, hi));
  } else {
    j["under_hull"] = nullptr;
  }
  j["samples"] = u.under.size();
  j["truncated"] = u.truncated;
  return j;
}

namespace {

Json certificate_json(const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::EmptySet: return Json{{"kind", "EmptySet"}};
    case Certificate::Kind::ExactEnclosure: return Json{{"kind", "ExactEnclosure"}, {"interval", to_json(*c.interval)}};
    case Certificate::Kind::OverApprox: return Json{{"kind", "OverApprox"}, {"interval", to_json(*c.interval)}};
  }
  return nullptr;
}

Json evidence_json(const HoldsEvidence& ev) {
  if (std::holds_alternative<Reflexive>(ev)) return Json{{"kind", "Reflexive"}};
  if (std::holds_alternative<VacuousTarget>(ev)) return Json{{"kind", "VacuousTarget"}};
  if (auto* c = std::get_if<IntervalContainment>(&ev))
    return Json{{"kind", "IntervalContainment"}, {"target", to_json(c->target)}, {"source", to_json(c->source)}};
  if (auto* w = std::get_if<SourceWitness>(&ev)) return Json{{"kind", "SourceWitness"}, {"witness", to_json(w->witness)}};
  const auto& o = std::get<OverContainment>(ev);
  return Json{{"kind", "OverContainment"}, {"target_over", to_json(o.target_over)}, {"source", to_json(o.source)}};
}

}  // namespace

Json to_json(const Verdict3& v) {
  if (auto* h = std::get_if<VerdictHolds>(&v)) return Json{{"verdict", "Holds"}, {"evidence", evidence_json(h->evidence)}};
  if (auto* f = std::get_if<VerdictFails>(&v)) {
    return Json{{"verdict", "Fails"},
                {"counterexample", to_json(f->counterexample)},
                {"certificate", certificate_json(f->outside)}};
  }
  return Json{{"verdict", "Unknown"}, {"reason", std::get<VerdictUnknown>(v).reason}};
}

Json to_json(const Classification& c) {
  return Json{{"class", to_string(c.kind)}, {"forward", to_json(c.forward)}, {"backward", to_json(c.backward)}};
}

namespace {

void audit(const Expr& source, const Expr& target, const Classification& c, const SampleOptions& opts) {
  if (!audit_verdict(source, target, c.forward, opts) || !audit_verdict(target, source, c.backward, opts))
    throw AuditFailure("evidence for " + print_expr(source) + " vs " + print_expr(target) + " failed re-validation");
}

void audit(const Expr& e, const Witness& w) {
  if (!token_consistent(w.env, e) || eval(w.env, e) != w.value)
    throw AuditFailure("witness for " + print_expr(e) + " failed re-validation");
}

Json warnings(const std::vector<Expr>& exprs, bool enabled) {
  Json out = Json::array();
  if (!enabled) return out;
  std::set<Dim> dims;
  for (const auto& e : exprs) {
    auto d = dims_of(e);
    dims.insert(d.begin(), d.end());
  }
  if (dims.size() > 1) {
    std::string list;
    for (const auto& d : dims) list += (list.empty() ? "" : ", ") + d.tag;
    out.push_back("mixed dimension tags: " + list);
  }
  return out;
}

Outcome outcome_of(const Classification& c) {
  return c.kind == RewriteClass::Undetermined ? Outcome::Undetermined : Outcome::Decided;
}

Json effective_json(const Expr& e) {
  auto eff = effective_intervals(e);
  if (!eff.feasible()) return Json{{"infeasible_token", eff.infeasible->name}};
  Json boxes = Json::object();
  for (const auto& [t, i] : eff.boxes) boxes[t.name] = to_json(i);
  return boxes;
}

}  // namespace

Report eval_report(const Expr& e, const TokenEnv& sigma) {
  Json j{{"command", "eval"},
         {"expr", print_expr(e)},
         {"env", to_json(sigma)},
         {"value", eval(sigma, e).str()},
         {"token_consistent", token_consistent(sigma, e)},
         {"effective_intervals", effective_json(e)}};
  return Report{{std::move(j)}, Outcome::Decided};
}

Report enclosure_report(const Expr& e, const ReportOptions& opts) {
  EnclosureOutcome out = enclosure(e, opts.sampling);
  Json witnesses = Json::array();
  bool truncated = false;
  if (auto* x = std::get_if<ExactInterval>(&out)) {
    for (const Rational& q : {x->interval.lo(), x->interval.hi()}) {
      Witness w{affine_witness(x->form, q).value_or(TokenEnv{}), q};
      audit(e, w);
      witnesses.push_back(to_json(w));
      if (x->interval.degenerate()) break;
    }
  } else if (auto* u = std::get_if<UnknownEnclosure>(&out)) {
    for (const auto& w : u->under) {
      audit(e, w);
      witnesses.push_back(to_json(w));
    }
    truncated = u->truncated;
  }
  Json j{{"command", "enclosure"},
         {"expr", print_expr(e)},
         {"grid", opts.sampling.grid},
         {"budget", opts.sampling.budget},
         {"enclosure", to_json(out)},
         {"over_approx", to_json(over_approx(e))},
         {"witnesses", std::move(witnesses)}};
  return Report{{std::move(j)}, truncated ? Outcome::BudgetExceeded : Outcome::Decided};
}

Report classify_report(const Expr& source, const Expr& target, const ReportOptions& opts) {
  Analyzed s = analyze(source, opts.sampling);
  Analyzed t = analyze(target, opts.sampling);
  Classification c = classify(s, t);
  audit(source, target, c, opts.sampling);
  Json j{{"command", "classify"},
         {"source", print_expr(source)},
         {"target", print_expr(target)},
         {"source_enclosure", to_json(s.encl)},
         {"target_enclosure", to_json(t.encl)},
         {"class", to_string(c.kind)},
         {"forward", to_json(c.forward)},
         {"backward", to_json(c.backward)},
         {"warnings", warnings({source, target}, opts.dim_lint)}};
  return Report{{std::move(j)}, outcome_of(c)};
}

namespace {

Json comparison_json(const ComparisonReport& r, const Expr& e1, const Expr& e2, const SampleOptions& opts) {
  Json j{{"blind_first", print_blind(r.blind_first)},
         {"blind_second", print_blind(r.blind_second)},
         {"blind_equal", r.blind_equal},
         {"blind_enclosure_first", to_json(r.blind_encl_first)},
         {"blind_enclosure_second", to_json(r.blind_encl_second)},
         {"blind_enclosures_equal", r.blind_enclosures_equal}};
  if (r.target) {
    audit(e1, *r.target, r.first, opts);
    audit(e2, *r.target, *r.second, opts);
    j["classification_first"] = to_json(r.first);
    j["classification_second"] = to_json(*r.second);
    j["classes_differ"] = r.classes_differ();
  } else {
    audit(e1, e2, r.first, opts);
    j["classification"] = to_json(r.first);
  }
  j["insufficiency_demonstrated"] = r.insufficiency_demonstrated();
  return j;
}

}  // namespace

Report blind_report(const Expr& e1, const Expr& e2, const std::optional<Expr>& target, const ReportOptions& opts) {
  ComparisonReport r = blind_compare(e1, e2, target, opts.sampling);
  Json j{{"command", "blind"},
         {"first", print_expr(e1)},
         {"second", print_expr(e2)},
         {"target", target ? Json(print_expr(*target)) : Json(nullptr)}};
  j.update(comparison_json(r, e1, e2, opts.sampling));
  std::vector<Expr> all{e1, e2};
  if (target) all.push_back(*target);
  j["warnings"] = warnings(all, opts.dim_lint);
  return Report{{std::move(j)}, Outcome::Decided};
}

Report demo_report(const FamilySpec& spec, const ReportOptions& opts) {
  DemoResult d = run_demo(spec, opts.sampling);
  audit(d.pair.source, d.pair.target, d.computed, opts.sampling);
  FamilySpec same = spec, distinct = spec;
  same.mode = TokenMode::Same;
  distinct.mode = TokenMode::Distinct;

  Json params = Json::object();
  if (spec.interval) params["interval"] = to_json(*spec.interval);
  if (spec.signal) params["signal"] = to_json(*spec.signal);
  if (spec.background) params["background"] = to_json(*spec.background);
  params["dim"] = spec.dim.tag;

  Json j{{"command", "demo"},
         {"family", to_string(spec.family)},
         {"mode", to_string(spec.mode)},
         {"parameters", std::move(params)},
         {"source", print_expr(d.pair.source)},
         {"target", print_expr(d.pair.target)},
         {"expected", to_string(d.expected)},
         {"computed", to_string(d.computed.kind)},
         {"match", d.matches()},
         {"forward", to_json(d.computed.forward)},
         {"backward", to_json(d.computed.backward)}};
  Json blind{{"same", print_expr(build_family(same).source)}, {"distinct", print_expr(build_family(distinct).source)}};
  blind.update(comparison_json(d.blind, build_family(same).source, build_family(distinct).source, opts.sampling));
  j["blind"] = std::move(blind);
  return Report{{std::move(j)}, outcome_of(d.computed)};
}

Report oracle_report(const Expr& e, const ReportOptions& opts) {
  SampleRun run = enumerate_samples(e, opts.sampling);
  Report r;
  r.records.push_back(Json{{"command", "oracle"},
                           {"expr", print_expr(e)},
                           {"grid", opts.sampling.grid},
                           {"budget", opts.sampling.budget},
                           {"planned", run.planned}});
  for (const auto& w : run.samples) {
    audit(e, w);
    r.records.push_back(to_json(w));
  }
  r.records.push_back(Json{{"rows", run.samples.size()}, {"truncated", run.truncated}});
  r.outcome = run.truncated ? Outcome::BudgetExceeded : Outcome::Decided;
  return r;
}

}  // namespace measrw
