#include <doctest.h>

#include "generators.hpp"
#include "measrw/blind.hpp"
#include "measrw/syntax.hpp"

using namespace measrw;

namespace {

Expr P(const char* s) { return parse_expr(s); }
BlindExpr bm(int lo, int hi) { return BlindExpr::meas(Interval(lo, hi), Dim{"d"}); }

}  // namespace

TEST_CASE("forget_tokens") {
  CHECK(forget_tokens(P("meas(t,[2,5],d) - meas(t,[2,5],d)")) ==
        forget_tokens(P("meas(t1,[2,5],d) - meas(t2,[2,5],d)")));
  CHECK(forget_tokens(P("exact(0,d)")) == BlindExpr::exact(Rational(0), Dim{"d"}));
  CHECK(forget_tokens(P("-meas(t,[1,2],d)")) == BlindExpr::neg(bm(1, 2)));
  CHECK_FALSE(forget_tokens(P("meas(t,[2,5],d)")) == forget_tokens(P("meas(t,[2,5],m)")));
  CHECK(print_blind(forget_tokens(P("meas(t1,[2,5],d) - meas(t2,[2,5],d)"))) == "meas(_,[2,5],d) - meas(_,[2,5],d)");
}

TEST_CASE("blind_enclosure") {
  CHECK(std::get<Interval>(blind_enclosure(BlindExpr::binary(BinaryOp::Sub, bm(2, 5), bm(2, 5)))) == Interval(-3, 3));
  CHECK(std::get<Interval>(blind_enclosure(BlindExpr::binary(BinaryOp::Div, bm(1, 2), bm(1, 2)))) ==
        Interval(Rational(1, 2), 2));
  CHECK(std::get<Interval>(blind_enclosure(BlindExpr::exact(Rational(0), Dim{"d"}))) == Interval(0, 0));
  CHECK_FALSE(is_bounded(blind_enclosure(BlindExpr::binary(BinaryOp::Div, bm(1, 2), bm(-1, 1)))));

  // Oracle cross-check.
  auto o = testing::blind_grid_oracle(BlindExpr::binary(BinaryOp::Div, bm(1, 2), bm(1, 2)), 5);
  CHECK(o.lo == Rational(1, 2));
  CHECK(o.hi == Rational(2));
}

TEST_CASE("blind_compare") {
  SUBCASE("cancellation pair") {
    auto r = blind_compare(P("meas(t,[2,5],d) - meas(t,[2,5],d)"), P("meas(t1,[2,5],d) - meas(t2,[2,5],d)"),
                           P("exact(0,d)"));
    CHECK(r.blind_equal);
    CHECK(r.blind_enclosures_equal);
    CHECK(r.first.kind == RewriteClass::Interchangeable);
    CHECK(r.second->kind == RewriteClass::OneWayOnlyForward);
    CHECK(r.insufficiency_demonstrated());
  }
  SUBCASE("background pair") {
    auto r = blind_compare(P("(meas(ts,[10,11],d)+meas(tb,[1,2],d))-meas(tb,[1,2],d)"),
                           P("(meas(ts,[10,11],d)+meas(tb1,[1,2],d))-meas(tb2,[1,2],d)"), P("meas(ts,[10,11],d)"));
    CHECK(r.blind_equal);
    CHECK(r.first.kind == RewriteClass::Interchangeable);
    CHECK(r.second->kind == RewriteClass::OneWayOnlyForward);
    CHECK(r.insufficiency_demonstrated());
  }
  SUBCASE("division pair") {
    auto r = blind_compare(P("meas(t,[1,2],d) / meas(t,[1,2],d)"), P("meas(t1,[1,2],d) / meas(t2,[1,2],d)"),
                           P("exact(1,d)"));
    CHECK(r.blind_equal);
    CHECK(r.first.kind == RewriteClass::Interchangeable);
    CHECK(r.second->kind == RewriteClass::OneWayOnlyForward);
    CHECK(r.insufficiency_demonstrated());
  }
  SUBCASE("structurally different, no target") {
    auto r = blind_compare(P("meas(t,[2,5],d)"), P("exact(3,d)"), std::nullopt);
    CHECK_FALSE(r.blind_equal);
    CHECK(std::get<Interval>(r.blind_encl_first) == Interval(2, 5));
    CHECK(std::get<Interval>(r.blind_encl_second) == Interval(3, 3));
    CHECK_FALSE(r.second.has_value());
    CHECK(r.first.kind == RewriteClass::OneWayOnlyForward);
    CHECK_FALSE(r.insufficiency_demonstrated());
  }
}

TEST_CASE("property: erasure soundness") {
  testing::Gen g(51);
  for (int i = 0; i < 300; ++i) {
    g.reset_pool(3);
    Expr e = g.any_expr(g.uniform(1, 12));
    auto be = blind_enclosure(forget_tokens(e));
    if (!is_bounded(be)) continue;
    for (const auto& w : enumerate_samples(e, {4, 5000}).samples) CHECK(range_contains(be, w.value));
  }
}

TEST_CASE("property: blind intervals match independent grid sampling") {
  testing::Gen g(52);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    g.reset_pool(4);
    // Division only by exact or strictly positive measured leaves, products
    // of interval leaves only: endpoints are attained on a grid containing
    // every declared endpoint.
    Expr e = g.affine_expr(g.uniform(1, 9));
    if (g.chance(0.3)) e = e / Expr::meas(Token{"p"}, g.positive_interval(), Dim{"d"});
    if (g.chance(0.3)) e = e * Expr::meas(Token{"q"}, g.interval(), Dim{"d"});
    BlindExpr b = forget_tokens(e);
    auto be = blind_enclosure(b);
    if (!is_bounded(be) || node_count(e) > 13) continue;
    auto o = testing::blind_grid_oracle(b, 2);
    CHECK(std::get<Interval>(be).lo() == o.lo);
    CHECK(std::get<Interval>(be).hi() == o.hi);
    ++checked;
  }
  CHECK(checked > 100);
}
