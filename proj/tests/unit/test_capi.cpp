#include <doctest.h>

#include <string>

#include "measrw/measrw.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  measrw_string_free(s);
  return out;
}

measrw_expr* parse(const char* text) {
  measrw_expr* e = nullptr;
  REQUIRE(measrw_expr_parse(text, &e) == MEASRW_OK);
  return e;
}

}  // namespace

TEST_CASE("parse, print, free") {
  measrw_expr* e = parse("meas(t1,[2,5],d)-meas(t2,[2,5],d)");
  char* text = nullptr;
  REQUIRE(measrw_expr_print(e, &text) == MEASRW_OK);
  CHECK(take(text) == "meas(t1,[2,5],d) - meas(t2,[2,5],d)");
  CHECK(measrw_expr_is_exact(e) == 0);
  char* v = nullptr;
  CHECK(measrw_expr_exact_value(e, &v) == MEASRW_ERR_NOT_EXACT);
  measrw_expr_free(e);

  measrw_expr* x = parse("exact(1,d)/exact(0,d)");
  CHECK(measrw_expr_is_exact(x) == 1);
  REQUIRE(measrw_expr_exact_value(x, &v) == MEASRW_OK);
  CHECK(take(v) == "0");
  measrw_expr_free(x);
}

TEST_CASE("error codes") {
  measrw_expr* e = nullptr;
  CHECK(measrw_expr_parse("meas(t,[5,2],d)", &e) == MEASRW_ERR_INTERVAL_ORDER);
  CHECK(e == nullptr);
  CHECK(measrw_last_error_offset() == 7);
  CHECK(std::string(measrw_last_error()).size() > 0);
  CHECK(measrw_expr_parse("exact(1,d", &e) == MEASRW_ERR_SYNTAX);
  CHECK(measrw_expr_parse(nullptr, &e) == MEASRW_ERR_INVALID_ARGUMENT);

  measrw_env* env = nullptr;
  CHECK(measrw_env_parse("t = = 3", &env) == MEASRW_ERR_SYNTAX);

  measrw_family_spec bad{"division", "same", "-1,2", nullptr, nullptr, "d"};
  char* json = nullptr;
  CHECK(measrw_report_demo(&bad, nullptr, &json, nullptr) == MEASRW_ERR_INVALID_ARGUMENT);
  measrw_family_spec unknown{"nope", "same", "1,2", nullptr, nullptr, "d"};
  CHECK(measrw_report_demo(&unknown, nullptr, &json, nullptr) == MEASRW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("eval") {
  measrw_expr* e = parse("meas(t1,[2,5],d)-meas(t2,[2,5],d)");
  measrw_env* env = nullptr;
  REQUIRE(measrw_env_parse("t1=5\nt2=2", &env) == MEASRW_OK);
  char* v = nullptr;
  int consistent = -1;
  REQUIRE(measrw_eval(e, env, &v, &consistent) == MEASRW_OK);
  CHECK(take(v) == "3");
  CHECK(consistent == 1);
  measrw_env_free(env);
  measrw_expr_free(e);
}

TEST_CASE("classify") {
  measrw_expr* src = parse("meas(t1,[2,5],d)-meas(t2,[2,5],d)");
  measrw_expr* tgt = parse("exact(0,d)");
  measrw_class c;
  REQUIRE(measrw_classify(src, tgt, nullptr, &c) == MEASRW_OK);
  CHECK(c == MEASRW_CLASS_ONE_WAY_FORWARD);
  REQUIRE(measrw_classify(tgt, src, nullptr, &c) == MEASRW_OK);
  CHECK(c == MEASRW_CLASS_ONE_WAY_BACKWARD);
  measrw_expr_free(src);
  measrw_expr_free(tgt);
}

TEST_CASE("reports") {
  measrw_options o;
  measrw_options_init(&o);
  CHECK(o.grid == 5);
  CHECK(o.budget == 100000);

  measrw_expr* div = parse("meas(t1,[1,2],d)/meas(t2,[1,2],d)");
  char* json = nullptr;
  measrw_outcome out;
  REQUIRE(measrw_report_enclosure(div, &o, &json, &out) == MEASRW_OK);
  CHECK(out == MEASRW_OUTCOME_DECIDED);
  std::string text = take(json);
  CHECK(text.find("\"kind\":\"Unknown\"") != std::string::npos);
  CHECK(text.back() == '\n');

  o.budget = 3;
  REQUIRE(measrw_report_enclosure(div, &o, &json, &out) == MEASRW_OK);
  CHECK(out == MEASRW_OUTCOME_BUDGET_EXCEEDED);
  take(json);
  CHECK(measrw_report_oracle(div, &o, &json, &out) == MEASRW_OK);
  CHECK(out == MEASRW_OUTCOME_BUDGET_EXCEEDED);
  take(json);
  measrw_expr_free(div);

  measrw_family_spec spec{"background", "distinct", nullptr, "10,11", "1,2", "d"};
  measrw_options_init(&o);
  o.pretty = 1;
  REQUIRE(measrw_report_demo(&spec, &o, &json, &out) == MEASRW_OK);
  text = take(json);
  CHECK(text.find("\"computed\": \"OneWayOnlyForward\"") != std::string::npos);
}
