/*
 * kdyck — exact enumeration of k-Dyck paths (up-steps (1,k), down-steps
 * (1,-1)) and their down-run statistics.
 *
 * C API of the shared library. All counts are exact integers of arbitrary
 * size and are returned as malloc'd decimal strings; release them with
 * kdyck_free(). Handles are opaque; every entry point reports a status code
 * and never throws across the boundary.
 */
#ifndef KDYCK_H
#define KDYCK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kdyck_status {
  KDYCK_OK = 0,
  KDYCK_ERR_INVALID_ARGUMENT = 1, /* bad parameter (e.g. k < 1, unknown kind) */
  KDYCK_ERR_LIMIT_EXCEEDED = 2,   /* request outside the library's guard limits */
  KDYCK_ERR_INTERNAL = 3          /* invariant violation inside the library */
} kdyck_status;

/* Human-readable description of a status code. Static storage; do not free. */
const char* kdyck_status_message(kdyck_status status);

const char* kdyck_version(void);

/* Releases any string returned through a char** out-parameter. NULL is ok. */
void kdyck_free(char* s);

/*
 * Number of k-Dyck paths with n_up up-steps ending at level end_level.
 * last_step_up != 0 restricts to paths whose final step is an up-step
 * (closed formula, a sum of O(end_level) terms); last_step_up == 0 counts
 * paths with any final step (dynamic program). Off-support queries yield "0".
 */
kdyck_status kdyck_count(long k, long n_up, long end_level, int last_step_up, char** out_decimal);

/* Fuss-Catalan number: binom(1+l(k+1), l) / (1+l(k+1)); also the z^l
 * coefficient of the kernel-equation root. */
kdyck_status kdyck_fuss_catalan(long k, long ell, char** out_decimal);

/* Total length of the terminal down-run over complete paths with m up-steps. */
kdyck_status kdyck_last_downrun_total(long k, long m, char** out_decimal);

/* Total length of the down-run right after the first up-step, over complete
 * paths with m+1 up-steps. */
kdyck_status kdyck_early_adventure_total(long k, long m, char** out_decimal);

/* ---- sequence families ---------------------------------------------- */

typedef enum kdyck_sequence_kind {
  /* counts by end level for fixed k and n (the index is the level j) */
  KDYCK_SEQ_END_LEVEL_COUNT = 0,
  KDYCK_SEQ_LAST_DOWNRUN_TOTAL = 1,
  KDYCK_SEQ_EARLY_ADVENTURE = 2,
  KDYCK_SEQ_FUSS_CATALAN = 3,
  KDYCK_SEQ_UBAR_COEFFICIENTS = 4
} kdyck_sequence_kind;

typedef struct kdyck_sequence kdyck_sequence;

/* n_up is consulted only by KDYCK_SEQ_END_LEVEL_COUNT; pass 0 otherwise. */
kdyck_status kdyck_sequence_open(kdyck_sequence_kind kind, long k, long n_up, kdyck_sequence** out);
kdyck_status kdyck_sequence_term(const kdyck_sequence* seq, long index, char** out_decimal);
void kdyck_sequence_close(kdyck_sequence* seq);

/* ---- verification sweep ---------------------------------------------- */

typedef enum kdyck_fault {
  KDYCK_FAULT_NONE = 0,
  KDYCK_FAULT_GENERALIZED_BINOMIAL = 1,
  KDYCK_FAULT_SHIFTED_COUNT = 2,
  KDYCK_FAULT_DROPPED_TERM = 3
} kdyck_fault;

typedef struct kdyck_verify_report kdyck_verify_report;

/*
 * Runs every cross-route consistency suite up to the given bounds
 * (1 <= k_max <= 6, 1 <= n_max <= 10, 1 <= order <= 200). A fault other than
 * KDYCK_FAULT_NONE swaps the closed-formula route for a deliberately broken
 * variant; a correct build must then report failures.
 */
kdyck_status kdyck_verify_run(long k_max, long n_max, long order, kdyck_fault fault,
                              kdyck_verify_report** out);
int kdyck_verify_report_all_passed(const kdyck_verify_report* report);
size_t kdyck_verify_report_suite_count(const kdyck_verify_report* report);
/* Pointers remain valid until the report is freed. Index out of range: NULL. */
const char* kdyck_verify_report_suite_name(const kdyck_verify_report* report, size_t index);
int kdyck_verify_report_suite_passed(const kdyck_verify_report* report, size_t index);
/* First counterexample of a failed suite, empty string for a passed one. */
const char* kdyck_verify_report_suite_detail(const kdyck_verify_report* report, size_t index);
void kdyck_verify_report_free(kdyck_verify_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KDYCK_H */
