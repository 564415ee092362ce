#include <doctest.h>

#include "generators.hpp"
#include "measrw/semantics.hpp"
#include "measrw/syntax.hpp"

using namespace measrw;

namespace {

Expr m(const char* t, int lo, int hi, const char* d = "d") { return Expr::meas(Token{t}, Interval(lo, hi), Dim{d}); }
Expr x(Rational q, const char* d = "d") { return Expr::exact(std::move(q), Dim{d}); }

}  // namespace

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(1) / Rational(0) == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(Interval(5, 2), IntervalOrderError);
  Interval i(2, 5);
  CHECK(i.contains(Rational(2)));
  CHECK(i.contains(Rational(5)));
  CHECK_FALSE(i.contains(Rational(6)));
  CHECK(i.intersect(Interval(4, 8)) == Interval(4, 5));
  CHECK_FALSE(Interval(0, 1).intersect(Interval(2, 3)).has_value());
}

TEST_CASE("parse: leaf and difference forms") {
  CHECK(parse_expr("meas(t,[2,5],d) - meas(t,[2,5],d)") == m("t", 2, 5) - m("t", 2, 5));
  CHECK(parse_expr("exact(0,d)") == x(0));
  CHECK(parse_expr("  exact( -3 / 4 , kg ) # trailing comment\n") == x(Rational(-3, 4), "kg"));
  CHECK(parse_expr("meas(t_1,[-1/2,3],m)") == Expr::meas(Token{"t_1"}, Interval(Rational(-1, 2), 3), Dim{"m"}));
}

TEST_CASE("parse: precedence and associativity") {
  Expr a = x(1), b = x(2), c = x(3);
  CHECK(parse_expr("exact(1,d) - exact(2,d) - exact(3,d)") == (a - b) - c);
  CHECK(parse_expr("exact(1,d) + exact(2,d) * exact(3,d)") == a + b * c);
  CHECK(parse_expr("exact(1,d) / exact(2,d) / exact(3,d)") == (a / b) / c);
  CHECK(parse_expr("-exact(1,d) * exact(2,d)") == (-a) * b);
  CHECK(parse_expr("--exact(1,d)") == -(-a));
  CHECK(parse_expr("exact(1,d) - -exact(2,d)") == a - (-b));
  CHECK(parse_expr("(exact(1,d) + exact(2,d)) * exact(3,d)") == (a + b) * c);
}

TEST_CASE("parse errors") {
  SUBCASE("interval order") {
    try {
      parse_expr("meas(t,[5,2],d)");
      FAIL("expected IntervalOrderError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseError::Kind::IntervalOrder);
      CHECK(e.position() == 7);
    }
  }
  SUBCASE("syntax") {
    for (const char* bad : {"", "exact(1,d", "exact(1,d) +", "meas(1t,[0,1],d)", "exact(1/0,d)", "exact(1.5,d)",
                            "foo(1,d)", "exact(1,d) exact(2,d)", "meas(t,[0,1])"}) {
      CAPTURE(bad);
      try {
        parse_expr(bad);
        FAIL("expected ParseError");
      } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::Syntax);
      }
    }
  }
  SUBCASE("position of an unexpected character") {
    try {
      parse_expr("exact(1,d) + ?");
    } catch (const ParseError& e) {
      CHECK(e.position() == 13);
    }
  }
}

TEST_CASE("print: canonical forms") {
  CHECK(print_expr(x(Rational(1, 2))) == "exact(1/2,d)");
  CHECK(print_expr(m("t1", 2, 5) - m("t2", 2, 5)) == "meas(t1,[2,5],d) - meas(t2,[2,5],d)");
  CHECK(print_expr(-x(3)) == "-exact(3,d)");
  CHECK(print_expr(x(1) - (x(2) - x(3))) == "exact(1,d) - (exact(2,d) - exact(3,d))");
  CHECK(print_expr(-(x(1) * x(2))) == "-(exact(1,d) * exact(2,d))");
  CHECK(print_expr((x(1) + x(2)) / x(3)) == "(exact(1,d) + exact(2,d)) / exact(3,d)");
}

TEST_CASE("property: parse(print(e)) == e") {
  testing::Gen g(0x5eed);
  for (int i = 0; i < 500; ++i) {
    g.reset_pool(4);
    Expr e = g.any_expr(g.uniform(1, 15));
    std::string text = print_expr(e);
    CAPTURE(text);
    CHECK(parse_expr(text) == e);
    CHECK(print_expr(parse_expr(text)) == text);
  }
}

TEST_CASE("effective intervals") {
  auto both = effective_intervals(m("t", 2, 5) + m("t", 4, 8));
  REQUIRE(both.feasible());
  CHECK(both.boxes.at(Token{"t"}) == Interval(4, 5));

  auto disjoint = effective_intervals(m("t", 0, 1) + m("t", 2, 3));
  REQUIRE_FALSE(disjoint.feasible());
  CHECK(disjoint.infeasible->name == "t");

  auto indep = effective_intervals(m("t1", 2, 5) - m("t2", 2, 5));
  CHECK(indep.boxes.size() == 2);
  CHECK(indep.boxes.at(Token{"t1"}) == Interval(2, 5));
  CHECK(indep.boxes.at(Token{"t2"}) == Interval(2, 5));

  // Dimension tags play no part.
  auto tagged = effective_intervals(m("t", 2, 5, "m") + m("t", 4, 8, "s") * x(3, "kg"));
  CHECK(tagged.boxes.at(Token{"t"}) == Interval(4, 5));
}

TEST_CASE("is_exact") {
  CHECK(is_exact(x(2) + x(3)));
  CHECK_FALSE(is_exact(m("t", 2, 5)));
  CHECK(is_exact(-(x(1) / x(0))));
}

TEST_CASE("property: exact expressions have no effective intervals") {
  testing::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Expr e = g.exact_expr(g.uniform(1, 12));
    REQUIRE(is_exact(e));
    auto eff = effective_intervals(e);
    CHECK(eff.feasible());
    CHECK(eff.boxes.empty());
  }
}
