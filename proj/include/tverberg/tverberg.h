#ifndef TVERBERG_H
#define TVERBERG_H

/* C interface to the Tverberg partition solver.
 *
 * All objects are opaque handles; every function that can fail returns a
 * tv_status and leaves a human-readable message in tv_last_error() (which is
 * thread-local). Strings returned through char** out-parameters are owned by
 * the caller and released with tv_string_free(). Out-parameters are set to
 * NULL on entry, so they never hold garbage after a failure.
 */

#include <stdint.h>

#if defined(_WIN32)
#define TV_API __declspec(dllexport)
#else
#define TV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tv_status {
  TV_OK = 0,
  TV_ERR_PARSE = 1,       /* malformed input document */
  TV_ERR_CONTRACT = 2,    /* argument violates a precondition */
  TV_ERR_UNSUPPORTED = 3, /* valid request outside the supported range */
  TV_ERR_SIZE = 4,        /* enumeration guard exceeded */
  TV_ERR_INTERNAL = 5     /* invariant breached; please report */
} tv_status;

typedef struct tv_instance tv_instance;
typedef struct tv_result tv_result;

TV_API const char* tv_version(void);

/* Message of the most recent failure on this thread; "" after a success. */
TV_API const char* tv_last_error(void);

TV_API void tv_string_free(char* text);

/* Instance documents: {"d": .., "r": .., "points": [[..], ..]} with exact
 * coordinates (integers, "p/q" fractions, or quoted decimals). r_override
 * of 0 keeps the document's r field (or infers r from the point count). */
TV_API tv_status tv_instance_parse(const char* json_text, int r_override,
                                   tv_instance** out);

/* Deterministic random instance. distribution is "grid" (integers in
 * [-1000, 1000]) or "cube" (rationals p/2^30 in [0, 1]). */
TV_API tv_status tv_instance_generate(int d, int r, const char* distribution,
                                      uint64_t seed, tv_instance** out);

TV_API tv_status tv_instance_to_json(const tv_instance* inst, char** out_text);
TV_API int tv_instance_dim(const tv_instance* inst);
TV_API int tv_instance_parts(const tv_instance* inst);
TV_API int tv_instance_size(const tv_instance* inst);
TV_API void tv_instance_free(tv_instance* inst);

typedef struct tv_solve_options {
  int perturb_exponent; /* perturbation radius = bounding extent / 2^this */
  int max_restarts;
  uint64_t seed;
  long pivot_cap;       /* 0 picks the default of 10 * n * r */
  int certify_original; /* nonzero: try to certify the unperturbed points */
} tv_solve_options;

TV_API tv_solve_options tv_solve_options_default(void);

TV_API tv_status tv_solve(const tv_instance* inst, const tv_solve_options* opts,
                          tv_result** out);

/* trace_path may be NULL; when given it is recorded in the document as the
 * side-car file holding the event trace. */
TV_API tv_status tv_result_to_json(const tv_result* res, const char* trace_path,
                                   char** out_text);

/* One JSON object per line, one line per singular event; "" when the run
 * needed no pivots. */
TV_API tv_status tv_result_trace_jsonl(const tv_result* res, char** out_text);

/* SVG of a d = 2 result, drawn over whichever point set the certificate
 * refers to. TV_ERR_UNSUPPORTED for other dimensions. */
TV_API tv_status tv_result_svg(const tv_instance* inst, const tv_result* res,
                               char** out_text);

TV_API void tv_result_free(tv_result* res);

/* Exact feasibility check of a partition document (a result document or a
 * bare array of index blocks). verdict becomes 1 when a certificate with
 * alpha >= 0 exists, else 0; out_doc receives the certificate or the
 * failure reason. A negative verdict is still TV_OK. */
TV_API tv_status tv_verify(const tv_instance* inst, const char* partition_json,
                           int* verdict, char** out_doc);

/* Exhaustive enumeration report for small instances (guard: 10^7 proper
 * partitions, else TV_ERR_SIZE). strict demands alpha > 0. */
TV_API tv_status tv_oracle(const tv_instance* inst, int strict, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* TVERBERG_H */
