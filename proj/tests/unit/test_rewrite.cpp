#include <doctest.h>

#include "generators.hpp"
#include "measrw/rewrite.hpp"
#include "measrw/syntax.hpp"

using namespace measrw;

namespace {

Expr P(const char* s) { return parse_expr(s); }

const char* kSameDiff = "meas(t,[2,5],d) - meas(t,[2,5],d)";
const char* kDistinctDiff = "meas(t1,[2,5],d) - meas(t2,[2,5],d)";

/// Renames every token through `f`, keeping intervals and tags.
Expr rename(const Expr& e, const std::function<std::string(const std::string&)>& f) {
  const auto& v = e.node().v;
  if (auto* m = std::get_if<MeasLeaf>(&v)) return Expr::meas(Token{f(m->token.name)}, m->interval, m->dim);
  if (std::holds_alternative<ExactLeaf>(v)) return e;
  if (auto* n = std::get_if<NegNode>(&v)) return -rename(n->operand, f);
  const auto& b = std::get<BinaryNode>(v);
  return Expr::binary(b.op, rename(b.lhs, f), rename(b.rhs, f));
}

}  // namespace

TEST_CASE("licensed") {
  SUBCASE("distinct difference licenses exact 0") {
    auto v = licensed(P(kDistinctDiff), P("exact(0,d)"));
    REQUIRE(holds(v));
    CHECK(audit_verdict(P(kDistinctDiff), P("exact(0,d)"), v));
  }
  SUBCASE("exact 0 does not license the distinct difference") {
    auto v = licensed(P("exact(0,d)"), P(kDistinctDiff));
    REQUIRE(fails(v));
    const auto& f = std::get<VerdictFails>(v);
    CHECK(f.counterexample.value == Rational(3));
    CHECK(f.counterexample.env(Token{"t1"}) == Rational(5));
    CHECK(f.counterexample.env(Token{"t2"}) == Rational(2));
    CHECK(f.outside.excludes(Rational(3)));
    CHECK(audit_verdict(P("exact(0,d)"), P(kDistinctDiff), v));
  }
  SUBCASE("reflexive") {
    auto e = P("meas(a,[1,2],d) * meas(b,[-1,3],d) / meas(a,[0,2],d)");
    CHECK(holds(licensed(e, e)));
  }
  SUBCASE("empty target is vacuously licensed") {
    auto v = licensed(P("exact(9,d)"), P("meas(t,[0,1],d)+meas(t,[2,3],d)"));
    REQUIRE(holds(v));
    CHECK(std::holds_alternative<VacuousTarget>(std::get<VerdictHolds>(v).evidence));
  }
  SUBCASE("nonempty target, empty source") {
    auto v = licensed(P("meas(t,[0,1],d)+meas(t,[2,3],d)"), P("exact(9,d)"));
    REQUIRE(fails(v));
    CHECK(std::get<VerdictFails>(v).outside.kind == Certificate::Kind::EmptySet);
  }
}

TEST_CASE("classify") {
  CHECK(classify(P(kSameDiff), P("exact(0,d)")).kind == RewriteClass::Interchangeable);
  CHECK(classify(P(kDistinctDiff), P("exact(0,d)")).kind == RewriteClass::OneWayOnlyForward);
  CHECK(classify(P("exact(0,d)"), P(kDistinctDiff)).kind == RewriteClass::OneWayOnlyBackward);
  CHECK(classify(P("exact(2,d)+exact(2,d)"), P("exact(5,d)")).kind == RewriteClass::Incomparable);
  CHECK(classify(P("exact(2,d)*exact(3,d)"), P("exact(6,d)")).kind == RewriteClass::Interchangeable);
  CHECK(classify(P("(meas(ts,[10,11],d)+meas(tb,[1,2],d))-meas(tb,[1,2],d)"), P("meas(ts,[10,11],d)")).kind ==
        RewriteClass::Interchangeable);
  CHECK(classify(P("(meas(ts,[10,11],d)+meas(tb1,[1,2],d))-meas(tb2,[1,2],d)"), P("meas(ts,[10,11],d)")).kind ==
        RewriteClass::OneWayOnlyForward);
  CHECK(classify(P("meas(t,[1,2],d)/meas(t,[1,2],d)"), P("exact(1,d)")).kind == RewriteClass::Interchangeable);
  CHECK(classify(P("meas(t1,[1,2],d)/meas(t2,[1,2],d)"), P("exact(1,d)")).kind == RewriteClass::OneWayOnlyForward);

  // Two non-certifiable enclosures whose relation is not decided by samples.
  auto a = P("meas(a,[1,2],d)*meas(b,[1,2],d)");
  auto b = P("meas(c,[1,2],d)*meas(e,[1,2],d)");
  CHECK(classify(a, b).kind == RewriteClass::Undetermined);
  CHECK(to_string(RewriteClass::Undetermined) == "Undetermined");
  CHECK(to_string(RewriteClass::OneWayOnlyForward) == "OneWayOnlyForward");
}

TEST_CASE("conservativity") {
  CHECK(check_conservativity(P("exact(3,d)+exact(4,d)"), P("exact(7,d)")));
  CHECK(check_conservativity(P("exact(3,d)"), P("exact(4,d)")));
  CHECK(check_conservativity(P("exact(1,d)/exact(0,d)"), P("exact(0,d)")));
  CHECK(classify(P("exact(1,d)/exact(0,d)"), P("exact(0,d)")).kind == RewriteClass::Interchangeable);
  CHECK_THROWS_AS(check_conservativity(P("meas(t,[0,1],d)"), P("exact(0,d)")), PreconditionViolated);
}

TEST_CASE("property: reflexivity") {
  testing::Gen g(41);
  for (int i = 0; i < 300; ++i) {
    g.reset_pool(3);
    Expr e = g.any_expr(g.uniform(1, 12));
    CHECK(holds(licensed(e, e)));
    CHECK(classify(e, e).kind == RewriteClass::Interchangeable);
  }
}

TEST_CASE("property: equivalence decomposes into both directions") {
  testing::Gen g(42);
  for (int i = 0; i < 300; ++i) {
    g.reset_pool(2);
    Expr a = g.any_expr(g.uniform(1, 7));
    Expr b = g.any_expr(g.uniform(1, 7));
    auto c = classify(a, b);
    CHECK((c.kind == RewriteClass::Interchangeable) == (holds(c.forward) && holds(c.backward)));
    CHECK((c.kind == RewriteClass::Incomparable) == (fails(c.forward) && fails(c.backward)));
    CHECK((c.kind == RewriteClass::OneWayOnlyForward) == (holds(c.forward) && fails(c.backward)));
    CHECK((c.kind == RewriteClass::OneWayOnlyBackward) == (fails(c.forward) && holds(c.backward)));
  }
}

TEST_CASE("property: transitivity on certified instances") {
  testing::Gen g(43);
  int chains = 0;
  for (int i = 0; i < 3000; ++i) {
    g.reset_pool(2);
    Expr a = g.affine_expr(g.uniform(1, 5));
    Expr b = g.affine_expr(g.uniform(1, 5));
    Expr c = g.affine_expr(g.uniform(1, 5));
    auto ea = enclosure(a), eb = enclosure(b), ec = enclosure(c);
    if (!std::holds_alternative<ExactInterval>(ea) || !std::holds_alternative<ExactInterval>(eb) ||
        !std::holds_alternative<ExactInterval>(ec))
      continue;
    if (holds(licensed(a, b)) && holds(licensed(b, c))) {
      CHECK(holds(licensed(a, c)));
      ++chains;
    }
  }
  CHECK(chains > 20);
}

TEST_CASE("property: every verdict's evidence audits") {
  testing::Gen g(44);
  for (int i = 0; i < 300; ++i) {
    g.reset_pool(3);
    Expr a = g.any_expr(g.uniform(1, 8));
    Expr b = g.chance(0.5) ? g.affine_expr(g.uniform(1, 6)) : g.any_expr(g.uniform(1, 6));
    auto c = classify(a, b);
    CHECK(audit_verdict(a, b, c.forward));
    CHECK(audit_verdict(b, a, c.backward));
  }
}

TEST_CASE("property: classes are invariant under token renaming") {
  testing::Gen g(45);
  auto bijection = [](const std::string& n) { return "renamed_" + n; };
  for (int i = 0; i < 200; ++i) {
    g.reset_pool(3);
    Expr a = g.any_expr(g.uniform(1, 8));
    Expr b = g.any_expr(g.uniform(1, 8));
    CHECK(classify(a, b).kind == classify(rename(a, bijection), rename(b, bijection)).kind);
  }
}

TEST_CASE("audit rejects forged evidence") {
  auto src = P("exact(0,d)");
  auto tgt = P(kDistinctDiff);
  TokenEnv bogus;
  bogus.bind(Token{"t1"}, Rational(6));
  bogus.bind(Token{"t2"}, Rational(2));
  Verdict3 forged = VerdictFails{Witness{bogus, Rational(4)}, Certificate{Certificate::Kind::ExactEnclosure, Interval(0, 0)}};
  CHECK_FALSE(audit_verdict(src, tgt, forged));

  TokenEnv wrong_value;
  wrong_value.bind(Token{"t1"}, Rational(5));
  wrong_value.bind(Token{"t2"}, Rational(2));
  Verdict3 misreported =
      VerdictFails{Witness{wrong_value, Rational(2)}, Certificate{Certificate::Kind::ExactEnclosure, Interval(0, 0)}};
  CHECK_FALSE(audit_verdict(src, tgt, misreported));

  Verdict3 wrong_cert =
      VerdictFails{Witness{wrong_value, Rational(3)}, Certificate{Certificate::Kind::ExactEnclosure, Interval(0, 5)}};
  CHECK_FALSE(audit_verdict(src, tgt, wrong_cert));
}
