#include "measrw/measrw.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "measrw/families.hpp"
#include "measrw/report.hpp"
#include "measrw/syntax.hpp"

struct measrw_expr {
  measrw::Expr expr;
};

struct measrw_env {
  measrw::TokenEnv env;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_offset = 0;

measrw_status set_error(measrw_status s, std::string msg, std::size_t offset = 0) {
  g_last_error = std::move(msg);
  g_last_offset = offset;
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

measrw::ReportOptions to_options(const measrw_options* opts) {
  measrw::ReportOptions o;
  if (opts) {
    o.sampling.grid = opts->grid;
    o.sampling.budget = opts->budget;
    o.dim_lint = opts->dim_lint != 0;
  }
  return o;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
measrw_status guarded(F&& body) {
  g_last_error.clear();
  g_last_offset = 0;
  try {
    return body();
  } catch (const measrw::ParseError& e) {
    auto s = e.kind() == measrw::ParseError::Kind::IntervalOrder ? MEASRW_ERR_INTERVAL_ORDER : MEASRW_ERR_SYNTAX;
    return set_error(s, e.what(), e.position());
  } catch (const measrw::BudgetExceeded& e) {
    return set_error(MEASRW_ERR_BUDGET_EXCEEDED, e.what());
  } catch (const measrw::AuditFailure& e) {
    return set_error(MEASRW_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(MEASRW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(MEASRW_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(MEASRW_ERR_INTERNAL, "unknown error");
  }
}

measrw_status emit(const measrw::Report& r, const measrw_options* opts, char** json, measrw_outcome* outcome) {
  *json = dup_string(r.render(opts && opts->pretty));
  if (!*json) return set_error(MEASRW_ERR_INTERNAL, "out of memory");
  if (outcome) {
    switch (r.outcome) {
      case measrw::Outcome::Decided: *outcome = MEASRW_OUTCOME_DECIDED; break;
      case measrw::Outcome::Undetermined: *outcome = MEASRW_OUTCOME_UNDETERMINED; break;
      case measrw::Outcome::BudgetExceeded: *outcome = MEASRW_OUTCOME_BUDGET_EXCEEDED; break;
    }
  }
  return MEASRW_OK;
}

measrw_status null_arg() { return set_error(MEASRW_ERR_INVALID_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

void measrw_options_init(measrw_options* opts) {
  if (!opts) return;
  opts->grid = 5;
  opts->budget = 100000;
  opts->pretty = 0;
  opts->dim_lint = 0;
}

const char* measrw_last_error(void) { return g_last_error.c_str(); }
size_t measrw_last_error_offset(void) { return g_last_offset; }
void measrw_string_free(char* s) { std::free(s); }

measrw_status measrw_expr_parse(const char* text, measrw_expr** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    *out = new measrw_expr{measrw::parse_expr(text)};
    return MEASRW_OK;
  });
}

void measrw_expr_free(measrw_expr* e) { delete e; }

measrw_status measrw_expr_print(const measrw_expr* e, char** out) {
  if (!e || !out) return null_arg();
  return guarded([&] {
    *out = dup_string(measrw::print_expr(e->expr));
    return MEASRW_OK;
  });
}

int measrw_expr_is_exact(const measrw_expr* e) { return e && measrw::is_exact(e->expr) ? 1 : 0; }

measrw_status measrw_expr_exact_value(const measrw_expr* e, char** out) {
  if (!e || !out) return null_arg();
  return guarded([&] {
    auto v = measrw::exact_value(e->expr);
    if (!v) return set_error(MEASRW_ERR_NOT_EXACT, "expression has a measured leaf");
    *out = dup_string(v->str());
    return MEASRW_OK;
  });
}

measrw_status measrw_env_parse(const char* text, measrw_env** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    *out = new measrw_env{measrw::parse_env(text)};
    return MEASRW_OK;
  });
}

void measrw_env_free(measrw_env* env) { delete env; }

measrw_status measrw_eval(const measrw_expr* e, const measrw_env* env, char** value, int* consistent) {
  if (!e || !value) return null_arg();
  return guarded([&] {
    measrw::TokenEnv sigma = env ? env->env : measrw::TokenEnv{};
    *value = dup_string(measrw::eval(sigma, e->expr).str());
    if (consistent) *consistent = measrw::token_consistent(sigma, e->expr) ? 1 : 0;
    return MEASRW_OK;
  });
}

measrw_status measrw_classify(const measrw_expr* source, const measrw_expr* target, const measrw_options* opts,
                              measrw_class* out) {
  if (!source || !target || !out) return null_arg();
  return guarded([&] {
    auto o = to_options(opts);
    auto c = measrw::classify(source->expr, target->expr, o.sampling);
    *out = static_cast<measrw_class>(static_cast<int>(c.kind));
    return MEASRW_OK;
  });
}

measrw_status measrw_report_eval(const measrw_expr* e, const measrw_env* env, const measrw_options* opts, char** json,
                                 measrw_outcome* outcome) {
  if (!e || !json) return null_arg();
  return guarded([&] {
    return emit(measrw::eval_report(e->expr, env ? env->env : measrw::TokenEnv{}), opts, json, outcome);
  });
}

measrw_status measrw_report_enclosure(const measrw_expr* e, const measrw_options* opts, char** json,
                                      measrw_outcome* outcome) {
  if (!e || !json) return null_arg();
  return guarded([&] { return emit(measrw::enclosure_report(e->expr, to_options(opts)), opts, json, outcome); });
}

measrw_status measrw_report_classify(const measrw_expr* source, const measrw_expr* target, const measrw_options* opts,
                                     char** json, measrw_outcome* outcome) {
  if (!source || !target || !json) return null_arg();
  return guarded([&] {
    return emit(measrw::classify_report(source->expr, target->expr, to_options(opts)), opts, json, outcome);
  });
}

measrw_status measrw_report_blind(const measrw_expr* first, const measrw_expr* second, const measrw_expr* target,
                                  const measrw_options* opts, char** json, measrw_outcome* outcome) {
  if (!first || !second || !json) return null_arg();
  return guarded([&] {
    std::optional<measrw::Expr> tgt;
    if (target) tgt = target->expr;
    return emit(measrw::blind_report(first->expr, second->expr, tgt, to_options(opts)), opts, json, outcome);
  });
}

measrw_status measrw_report_demo(const measrw_family_spec* spec, const measrw_options* opts, char** json,
                                 measrw_outcome* outcome) {
  if (!spec || !spec->family || !spec->mode || !json) return null_arg();
  return guarded([&] {
    measrw::FamilySpec fs;
    fs.family = measrw::parse_family(spec->family);
    fs.mode = measrw::parse_mode(spec->mode);
    if (spec->interval) fs.interval = measrw::parse_interval_arg(spec->interval);
    if (spec->signal) fs.signal = measrw::parse_interval_arg(spec->signal);
    if (spec->background) fs.background = measrw::parse_interval_arg(spec->background);
    if (spec->dim) fs.dim = measrw::Dim{spec->dim};
    return emit(measrw::demo_report(fs, to_options(opts)), opts, json, outcome);
  });
}

measrw_status measrw_report_oracle(const measrw_expr* e, const measrw_options* opts, char** json,
                                   measrw_outcome* outcome) {
  if (!e || !json) return null_arg();
  return guarded([&] { return emit(measrw::oracle_report(e->expr, to_options(opts)), opts, json, outcome); });
}

}  // extern "C"
