#include "measrw/rewrite.hpp"

namespace measrw {

Analyzed analyze(const Expr& e, const SampleOptions& opts) {
  return Analyzed{e, enclosure(e, opts), over_approx(e)};
}

namespace {

// Realizes `q` in a certified enclosure of the target.
Witness target_witness(const ExactInterval& t, const Rational& q) {
  auto sigma = affine_witness(t.form, q);
  return Witness{sigma.value_or(TokenEnv{}), q};
}

// Prefers the upper end of the target when both ends escape.
std::optional<Rational> escaping_endpoint(const Interval& target, const Interval& source) {
  if (target.hi() > source.hi()) return target.hi();
  if (target.lo() < source.lo()) return target.lo();
  return std::nullopt;
}

Verdict3 refute_with_samples(const UnknownEnclosure& t, const Certificate& cert) {
  for (const auto& w : t.under)
    if (cert.excludes(w.value)) return VerdictFails{w, cert};
  return VerdictUnknown{};
}

}  // namespace

Verdict3 licensed(const Analyzed& source, const Analyzed& target) {
  if (source.expr == target.expr) return VerdictHolds{Reflexive{}};
  if (std::holds_alternative<EmptySet>(target.encl)) return VerdictHolds{VacuousTarget{}};

  const auto* src_exact = std::get_if<ExactInterval>(&source.encl);
  const bool src_empty = std::holds_alternative<EmptySet>(source.encl);

  if (const auto* tgt = std::get_if<ExactInterval>(&target.encl)) {
    if (src_empty) {
      return VerdictFails{target_witness(*tgt, tgt->interval.hi()), {Certificate::Kind::EmptySet, std::nullopt}};
    }
    if (src_exact) {
      if (src_exact->interval.contains(tgt->interval))
        return VerdictHolds{IntervalContainment{tgt->interval, src_exact->interval}};
      Rational q = *escaping_endpoint(tgt->interval, src_exact->interval);
      return VerdictFails{target_witness(*tgt, q), {Certificate::Kind::ExactEnclosure, src_exact->interval}};
    }
    if (tgt->interval.degenerate()) {
      const Rational& q = tgt->interval.lo();
      auto m = membership(source.encl, q);
      if (auto* h = std::get_if<MemberHolds>(&m)) return VerdictHolds{SourceWitness{h->witness}};
      if (auto* f = std::get_if<MemberFails>(&m)) return VerdictFails{target_witness(*tgt, q), f->certificate};
      return VerdictUnknown{"single target value " + q.str() + " not found among source samples"};
    }
    const auto& src = std::get<UnknownEnclosure>(source.encl);
    if (const auto* over = std::get_if<Interval>(&src.over)) {
      if (auto q = escaping_endpoint(tgt->interval, *over))
        return VerdictFails{target_witness(*tgt, *q), {Certificate::Kind::OverApprox, *over}};
    }
    return VerdictUnknown{"source enclosure not certified; target lies within its over-approximation"};
  }

  const auto& tgt = std::get<UnknownEnclosure>(target.encl);
  if (src_empty) {
    auto v = refute_with_samples(tgt, {Certificate::Kind::EmptySet, std::nullopt});
    if (fails(v)) return v;
    return VerdictUnknown{"no target sample available"};
  }
  if (src_exact) {
    auto v = refute_with_samples(tgt, {Certificate::Kind::ExactEnclosure, src_exact->interval});
    if (fails(v)) return v;
    if (const auto* over = std::get_if<Interval>(&tgt.over); over && src_exact->interval.contains(*over))
      return VerdictHolds{OverContainment{*over, src_exact->interval}};
    return VerdictUnknown{"target samples lie inside the source enclosure but its over-approximation does not"};
  }
  const auto& src = std::get<UnknownEnclosure>(source.encl);
  if (const auto* over = std::get_if<Interval>(&src.over)) {
    auto v = refute_with_samples(tgt, {Certificate::Kind::OverApprox, *over});
    if (fails(v)) return v;
  }
  return VerdictUnknown{"neither enclosure is certified"};
}

Verdict3 licensed(const Expr& source, const Expr& target, const SampleOptions& opts) {
  return licensed(analyze(source, opts), analyze(target, opts));
}

std::string to_string(RewriteClass c) {
  switch (c) {
    case RewriteClass::Interchangeable: return "Interchangeable";
    case RewriteClass::OneWayOnlyForward: return "OneWayOnlyForward";
    case RewriteClass::OneWayOnlyBackward: return "OneWayOnlyBackward";
    case RewriteClass::Incomparable: return "Incomparable";
    case RewriteClass::Undetermined: return "Undetermined";
  }
  return "?";
}

Classification classify(const Analyzed& source, const Analyzed& target) {
  Verdict3 fwd = licensed(source, target);
  Verdict3 bwd = licensed(target, source);
  RewriteClass kind = RewriteClass::Undetermined;
  if (holds(fwd) && holds(bwd)) kind = RewriteClass::Interchangeable;
  else if (holds(fwd) && fails(bwd)) kind = RewriteClass::OneWayOnlyForward;
  else if (fails(fwd) && holds(bwd)) kind = RewriteClass::OneWayOnlyBackward;
  else if (fails(fwd) && fails(bwd)) kind = RewriteClass::Incomparable;
  return Classification{kind, std::move(fwd), std::move(bwd)};
}

Classification classify(const Expr& source, const Expr& target, const SampleOptions& opts) {
  return classify(analyze(source, opts), analyze(target, opts));
}

bool check_conservativity(const Expr& e, const Expr& e2) {
  auto a = exact_value(e);
  auto b = exact_value(e2);
  if (!a || !b) throw PreconditionViolated("conservativity check needs two expressions without measured leaves");
  RewriteClass expected = *a == *b ? RewriteClass::Interchangeable : RewriteClass::Incomparable;
  return classify(e, e2).kind == expected;
}

namespace {

bool witness_valid(const Witness& w, const Expr& e) {
  return token_consistent(w.env, e) && effective_intervals(e).feasible() && eval(w.env, e) == w.value;
}

bool certificate_valid(const Certificate& c, const Expr& e, const SampleOptions& opts) {
  switch (c.kind) {
    case Certificate::Kind::EmptySet:
      return !effective_intervals(e).feasible();
    case Certificate::Kind::ExactEnclosure: {
      auto outcome = enclosure(e, opts);
      auto* ex = std::get_if<ExactInterval>(&outcome);
      return ex && c.interval && ex->interval == *c.interval;
    }
    case Certificate::Kind::OverApprox: {
      auto over = over_approx(e);
      auto* i = std::get_if<Interval>(&over);
      return i && c.interval && *i == *c.interval;
    }
  }
  return false;
}

}  // namespace

bool audit_verdict(const Expr& source, const Expr& target, const Verdict3& v, const SampleOptions& opts) {
  if (auto* f = std::get_if<VerdictFails>(&v)) {
    return witness_valid(f->counterexample, target) && f->outside.excludes(f->counterexample.value) &&
           certificate_valid(f->outside, source, opts);
  }
  if (auto* h = std::get_if<VerdictHolds>(&v)) {
    if (auto* sw = std::get_if<SourceWitness>(&h->evidence)) {
      auto t = enclosure(target, opts);
      auto* ex = std::get_if<ExactInterval>(&t);
      return witness_valid(sw->witness, source) && ex && ex->interval == Interval::point(sw->witness.value);
    }
    if (std::holds_alternative<Reflexive>(h->evidence)) return source == target;
    if (std::holds_alternative<VacuousTarget>(h->evidence)) return !effective_intervals(target).feasible();
    if (auto* ic = std::get_if<IntervalContainment>(&h->evidence)) {
      return certificate_valid({Certificate::Kind::ExactEnclosure, ic->source}, source, opts) &&
             certificate_valid({Certificate::Kind::ExactEnclosure, ic->target}, target, opts) &&
             ic->source.contains(ic->target);
    }
    if (auto* oc = std::get_if<OverContainment>(&h->evidence)) {
      return certificate_valid({Certificate::Kind::ExactEnclosure, oc->source}, source, opts) &&
             certificate_valid({Certificate::Kind::OverApprox, oc->target_over}, target, opts) &&
             oc->source.contains(oc->target_over);
    }
  }
  return true;
}

}  // namespace measrw
