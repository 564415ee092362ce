/*
 * C interface to the measrw library.
 *
 * Expressions and environments are opaque handles owned by the caller and
 * released with the matching *_free function. Strings returned through
 * `char**` out-parameters are heap allocated and must be released with
 * measrw_string_free. Every function returning measrw_status leaves a
 * human-readable message in measrw_last_error() on failure (per thread).
 */
#ifndef MEASRW_H
#define MEASRW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef MEASRW_BUILDING
#    define MEASRW_API __declspec(dllexport)
#  else
#    define MEASRW_API __declspec(dllimport)
#  endif
#else
#  define MEASRW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct measrw_expr measrw_expr;
typedef struct measrw_env measrw_env;

typedef enum measrw_status {
  MEASRW_OK = 0,
  MEASRW_ERR_SYNTAX = 1,
  MEASRW_ERR_INTERVAL_ORDER = 2,
  MEASRW_ERR_INVALID_ARGUMENT = 3,
  MEASRW_ERR_NOT_EXACT = 4,
  MEASRW_ERR_BUDGET_EXCEEDED = 5,
  MEASRW_ERR_INTERNAL = 6
} measrw_status;

/* How a successful report ended; drives the CLI exit code. */
typedef enum measrw_outcome {
  MEASRW_OUTCOME_DECIDED = 0,
  MEASRW_OUTCOME_UNDETERMINED = 1,
  MEASRW_OUTCOME_BUDGET_EXCEEDED = 2
} measrw_outcome;

typedef enum measrw_class {
  MEASRW_CLASS_INTERCHANGEABLE = 0,
  MEASRW_CLASS_ONE_WAY_FORWARD = 1,
  MEASRW_CLASS_ONE_WAY_BACKWARD = 2,
  MEASRW_CLASS_INCOMPARABLE = 3,
  MEASRW_CLASS_UNDETERMINED = 4
} measrw_class;

typedef struct measrw_options {
  uint32_t grid;   /* grid points per token, >= 2 (default 5) */
  uint64_t budget; /* max sampled environments (default 100000) */
  int pretty;      /* indent JSON records */
  int dim_lint;    /* warn on mixed dimension tags */
} measrw_options;

/* Text fields; interval strings are "lo,hi" or "[lo,hi]". Unused fields may be NULL. */
typedef struct measrw_family_spec {
  const char* family; /* cancellation | background | division */
  const char* mode;   /* same | distinct */
  const char* interval;
  const char* signal;
  const char* background;
  const char* dim;    /* NULL means "d" */
} measrw_family_spec;

MEASRW_API void measrw_options_init(measrw_options* opts);
MEASRW_API const char* measrw_last_error(void);
/* Byte offset of the last syntax error, or 0. */
MEASRW_API size_t measrw_last_error_offset(void);
MEASRW_API void measrw_string_free(char* s);

MEASRW_API measrw_status measrw_expr_parse(const char* text, measrw_expr** out);
MEASRW_API void measrw_expr_free(measrw_expr* e);
MEASRW_API measrw_status measrw_expr_print(const measrw_expr* e, char** out);
MEASRW_API int measrw_expr_is_exact(const measrw_expr* e);
MEASRW_API measrw_status measrw_expr_exact_value(const measrw_expr* e, char** out);

MEASRW_API measrw_status measrw_env_parse(const char* text, measrw_env** out);
MEASRW_API void measrw_env_free(measrw_env* env);

MEASRW_API measrw_status measrw_eval(const measrw_expr* e, const measrw_env* env, char** value, int* consistent);
MEASRW_API measrw_status measrw_classify(const measrw_expr* source, const measrw_expr* target,
                                         const measrw_options* opts, measrw_class* out);

/* Reports: line-delimited JSON written to *json. */
MEASRW_API measrw_status measrw_report_eval(const measrw_expr* e, const measrw_env* env, const measrw_options* opts,
                                            char** json, measrw_outcome* outcome);
MEASRW_API measrw_status measrw_report_enclosure(const measrw_expr* e, const measrw_options* opts, char** json,
                                                 measrw_outcome* outcome);
MEASRW_API measrw_status measrw_report_classify(const measrw_expr* source, const measrw_expr* target,
                                                const measrw_options* opts, char** json, measrw_outcome* outcome);
/* target may be NULL: the two expressions are then classified against each other. */
MEASRW_API measrw_status measrw_report_blind(const measrw_expr* first, const measrw_expr* second,
                                             const measrw_expr* target, const measrw_options* opts, char** json,
                                             measrw_outcome* outcome);
MEASRW_API measrw_status measrw_report_demo(const measrw_family_spec* spec, const measrw_options* opts, char** json,
                                            measrw_outcome* outcome);
MEASRW_API measrw_status measrw_report_oracle(const measrw_expr* e, const measrw_options* opts, char** json,
                                              measrw_outcome* outcome);

#ifdef __cplusplus
}
#endif

#endif /* MEASRW_H */
