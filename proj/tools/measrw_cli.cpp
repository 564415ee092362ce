// measrw: command-line front end over the measrw C API.
//
// Exit codes: 0 success / decided, 2 input error (parse, usage, family
// parameters), 3 undetermined classification, 4 sampling budget exceeded,
// 1 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "measrw/measrw.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndetermined = 3;
constexpr int kExitBudget = 4;

struct InputError {
  std::string message;
};

struct ExprDeleter {
  void operator()(measrw_expr* e) const { measrw_expr_free(e); }
};
struct EnvDeleter {
  void operator()(measrw_env* e) const { measrw_env_free(e); }
};
using ExprPtr = std::unique_ptr<measrw_expr, ExprDeleter>;
using EnvPtr = std::unique_ptr<measrw_env, EnvDeleter>;

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string describe(measrw_status s, const std::string& path) {
  std::string msg = path + ": " + measrw_last_error();
  if (s == MEASRW_ERR_SYNTAX || s == MEASRW_ERR_INTERVAL_ORDER)
    msg += " (offset " + std::to_string(measrw_last_error_offset()) + ")";
  return msg;
}

ExprPtr load_expr(const std::string& path) {
  std::string text = read_file(path);
  measrw_expr* e = nullptr;
  if (auto s = measrw_expr_parse(text.c_str(), &e); s != MEASRW_OK) throw InputError{describe(s, path)};
  return ExprPtr(e);
}

EnvPtr load_env(const std::string& path) {
  std::string text = read_file(path);
  measrw_env* env = nullptr;
  if (auto s = measrw_env_parse(text.c_str(), &env); s != MEASRW_OK) throw InputError{describe(s, path)};
  return EnvPtr(env);
}

int report(measrw_status s, char* json, measrw_outcome outcome) {
  if (s != MEASRW_OK) {
    std::cerr << "measrw: " << measrw_last_error() << "\n";
    if (s == MEASRW_ERR_INVALID_ARGUMENT || s == MEASRW_ERR_SYNTAX || s == MEASRW_ERR_INTERVAL_ORDER)
      return kExitInput;
    return s == MEASRW_ERR_BUDGET_EXCEEDED ? kExitBudget : kExitInternal;
  }
  std::fputs(json, stdout);
  measrw_string_free(json);
  switch (outcome) {
    case MEASRW_OUTCOME_DECIDED: return kExitOk;
    case MEASRW_OUTCOME_UNDETERMINED: return kExitUndetermined;
    case MEASRW_OUTCOME_BUDGET_EXCEEDED: return kExitBudget;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token-sensitive enclosures and rewrite classification for measurement expressions"};
  app.require_subcommand(1);

  measrw_options opts;
  measrw_options_init(&opts);
  bool pretty = false;
  bool json = false;
  bool dim_lint = false;
  app.add_option("--grid", opts.grid, "grid points per token for sampling")
      ->check(CLI::Range(2u, 1000000u))
      ->capture_default_str();
  app.add_option("--budget", opts.budget, "maximum number of sampled environments")->capture_default_str();
  auto* json_flag = app.add_flag("--json", json, "compact line-delimited JSON (default)");
  app.add_flag("--pretty", pretty, "indented JSON")->excludes(json_flag);
  app.add_flag("--dim-lint", dim_lint, "warn when dimension tags differ");

  std::string expr_file, env_file, src_file, tgt_file, first_file, second_file, target_file;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression under an environment")->fallthrough();
  eval_cmd->add_option("expr", expr_file, "expression file")->required();
  eval_cmd->add_option("env", env_file, "environment file (token = rational per line)");

  auto* encl_cmd = app.add_subcommand("enclosure", "compute the warranted enclosure")->fallthrough();
  encl_cmd->add_option("expr", expr_file, "expression file")->required();

  auto* cls_cmd = app.add_subcommand("classify", "classify the rewrite source -> target")->fallthrough();
  cls_cmd->add_option("source", src_file, "source expression file")->required();
  cls_cmd->add_option("target", tgt_file, "target expression file")->required();

  auto* blind_cmd = app.add_subcommand("blind", "compare token-erased summaries with rewrite classes")->fallthrough();
  blind_cmd->add_option("first", first_file, "first expression file")->required();
  blind_cmd->add_option("second", second_file, "second expression file")->required();
  blind_cmd->add_option("target", target_file, "optional common target expression file");

  std::string family, mode, interval, signal, background, dim = "d";
  auto* demo_cmd = app.add_subcommand("demo", "run one rewrite-family instance")->fallthrough();
  demo_cmd->add_option("--family", family, "cancellation | background | division")->required();
  demo_cmd->add_option("--mode", mode, "same | distinct")->required();
  demo_cmd->add_option("--interval", interval, "interval lo,hi (cancellation, division)");
  demo_cmd->add_option("--signal", signal, "signal interval lo,hi (background)");
  demo_cmd->add_option("--background", background, "background interval lo,hi (background)");
  demo_cmd->add_option("--dim", dim, "dimension tag")->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "dump every sampled environment and value")->fallthrough();
  oracle_cmd->add_option("expr", expr_file, "expression file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  opts.pretty = pretty ? 1 : 0;
  opts.dim_lint = dim_lint ? 1 : 0;

  char* out = nullptr;
  measrw_outcome outcome = MEASRW_OUTCOME_DECIDED;
  auto finish = [&](measrw_status s) { return report(s, out, outcome); };
  try {
    if (*eval_cmd) {
      auto e = load_expr(expr_file);
      EnvPtr env = env_file.empty() ? nullptr : load_env(env_file);
      return finish(measrw_report_eval(e.get(), env.get(), &opts, &out, &outcome));
    }
    if (*encl_cmd) {
      auto e = load_expr(expr_file);
      return finish(measrw_report_enclosure(e.get(), &opts, &out, &outcome));
    }
    if (*cls_cmd) {
      auto s = load_expr(src_file);
      auto t = load_expr(tgt_file);
      return finish(measrw_report_classify(s.get(), t.get(), &opts, &out, &outcome));
    }
    if (*blind_cmd) {
      auto a = load_expr(first_file);
      auto b = load_expr(second_file);
      ExprPtr t = target_file.empty() ? nullptr : load_expr(target_file);
      return finish(measrw_report_blind(a.get(), b.get(), t.get(), &opts, &out, &outcome));
    }
    if (*demo_cmd) {
      measrw_family_spec spec{family.c_str(),
                              mode.c_str(),
                              interval.empty() ? nullptr : interval.c_str(),
                              signal.empty() ? nullptr : signal.c_str(),
                              background.empty() ? nullptr : background.c_str(),
                              dim.c_str()};
      return finish(measrw_report_demo(&spec, &opts, &out, &outcome));
    }
    if (*oracle_cmd) {
      auto e = load_expr(expr_file);
      return finish(measrw_report_oracle(e.get(), &opts, &out, &outcome));
    }
  } catch (const InputError& e) {
    std::cerr << "measrw: " << e.message << "\n";
    return kExitInput;
  }
  return kExitInternal;
}
