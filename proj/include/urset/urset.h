#ifndef URSET_URSET_H
#define URSET_URSET_H

/*
 * C interface to the urset library.
 *
 * Every rational crosses the boundary as a string "a/b" or "a". Structured
 * inputs (polynomials, pairs, forms, points) are JSON documents in the
 * formats accepted by the command-line tool. Reports are opaque; their JSON
 * and table renderings stay valid until urset_report_free.
 *
 * Functions return a urset_status. On any status other than URSET_OK and
 * URSET_VERDICT_FAILED, urset_last_error() describes the failure for the
 * calling thread. A search that runs out of budget returns URSET_E_BUDGET
 * and still hands back a report holding the partial results.
 */

#include <stddef.h>

#if defined(_WIN32)
#if defined(URSET_BUILDING_LIBRARY)
#define URSET_API __declspec(dllexport)
#else
#define URSET_API __declspec(dllimport)
#endif
#else
#define URSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum urset_status {
  URSET_OK = 0,
  URSET_VERDICT_FAILED = 1, /* report produced; a mathematical check failed */
  URSET_E_USAGE = 2,        /* malformed input or schema violation */
  URSET_E_BUDGET = 3,       /* factoring or enumeration budget exhausted */
  URSET_E_DOMAIN = 4,       /* mathematically invalid request */
  URSET_E_INTERNAL = 5
} urset_status;

typedef struct urset_context urset_context;
typedef struct urset_report urset_report;

URSET_API const char* urset_version(void);

/* Message for the last failing call on this thread; never NULL. */
URSET_API const char* urset_last_error(void);

/* Path of the offending input field for the last URSET_E_USAGE, or "". */
URSET_API const char* urset_last_error_path(void);

/*
 * primes_csv: "2,3,7"; "" is the empty set.
 * factoring_budget: decimal integer string, NULL for the default.
 * workers: 0 means 1. digits: decimals in display logs, 0 means 6.
 */
URSET_API urset_status urset_context_new(const char* primes_csv, const char* factoring_budget, unsigned workers,
                                         int digits, urset_context** out);
URSET_API void urset_context_free(urset_context* ctx);

/* JSON {"coeffs": [...]} for X^n + a X^(n-m) + b. Free with urset_string_free. */
URSET_API urset_status urset_family_poly_json(unsigned long n, unsigned long m, const char* a, const char* b,
                                              char** out);

URSET_API urset_status urset_validate_poly(const urset_context* ctx, unsigned long n, unsigned long m, const char* a,
                                           const char* b, urset_report** out);

/* threshold: admissibility height threshold as an integer string, or NULL. */
URSET_API urset_status urset_share(const urset_context* ctx, const char* poly_json, const char* pairs_json,
                                   const char* threshold, urset_report** out);

URSET_API urset_status urset_trace(const urset_context* ctx, unsigned long n, unsigned long m, const char* a,
                                   const char* b, const char* pairs_json, const char* epsilon, urset_report** out);

/* strict != 0 rejects non-primitive points instead of normalizing them. */
URSET_API urset_status urset_subspace(const urset_context* ctx, const char* forms_json, const char* points_json,
                                      const char* epsilon, int strict, urset_report** out);

URSET_API urset_status urset_corollary(const urset_context* ctx, const char* A, const char* B, const char* C,
                                       const char* pairs_json, const char* epsilon, urset_report** out);

URSET_API urset_status urset_unit_eq(const urset_context* ctx, unsigned bound, urset_report** out);

/* height: integer string. Budgets of 0 select the defaults. */
URSET_API urset_status urset_search_shared(const urset_context* ctx, const char* poly_json, const char* height,
                                           unsigned exp_bound, size_t candidate_budget, size_t pair_budget,
                                           urset_report** out);

URSET_API urset_status urset_search_su(const urset_context* ctx, const char* poly_json, const char* c,
                                       const char* height, unsigned exp_bound, size_t candidate_budget,
                                       size_t pair_budget, urset_report** out);

/* Pretty-printed JSON of the report body (no run header). */
URSET_API const char* urset_report_json(const urset_report* rep);
URSET_API const char* urset_report_table(const urset_report* rep);
/* 1 when every mathematical check passed, 0 otherwise. */
URSET_API int urset_report_verdict(const urset_report* rep);
URSET_API void urset_report_free(urset_report* rep);

/* Primitives. String results are freed with urset_string_free. */
URSET_API urset_status urset_ord(const char* p, const char* x, long* out);
URSET_API urset_status urset_height(const char* x, char** out);
/* ell = 0 gives the full counting function N, otherwise N^(ell). */
URSET_API urset_status urset_counting(const urset_context* ctx, const char* x, unsigned long ell, char** out);
URSET_API urset_status urset_display_log(const char* magnitude, int digits, char** out);
URSET_API void urset_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* URSET_URSET_H */
