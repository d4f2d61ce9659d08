/*
 * lensd C API.
 *
 * Exact d-invariants of lens spaces, homology cobordism classification of
 * pairs L(p,q1), L(p,q2), and the finite verification sweeps, behind opaque
 * handles. Every fallible call returns a lensd_status; on failure a message is
 * available from lensd_last_error() on the calling thread. Handles are
 * immutable after creation and may be shared between threads. Strings
 * returned by accessors are owned by the handle and stay valid until the
 * handle is destroyed.
 */
#ifndef LENSD_LENSD_H
#define LENSD_LENSD_H

#include <stdint.h>

#if defined(_WIN32)
#define LENSD_API __declspec(dllexport)
#else
#define LENSD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lensd_status {
  LENSD_OK = 0,
  LENSD_INVALID_ARGUMENT = 1, /* outside an operation's domain */
  LENSD_NOT_COPRIME = 2,      /* gcd condition violated */
  LENSD_OUT_OF_RANGE = 3,     /* index past the end of a handle's data */
  LENSD_INTERNAL_ERROR = 4,   /* a computed object failed its own postcondition */
  LENSD_NULL_POINTER = 5
} lensd_status;

LENSD_API const char* lensd_version(void);
LENSD_API const char* lensd_status_name(lensd_status status);
/* Message of the most recent failing call on this thread; "" if none. */
LENSD_API const char* lensd_last_error(void);

/* ---- d-invariant tables ------------------------------------------------ */

typedef struct lensd_dtable lensd_dtable;

/* Table of d(L(p,q), i) for i = 0..p-1. L(1,0) is the three-sphere. */
LENSD_API lensd_status lensd_dtable_create(int64_t p, int64_t q, lensd_dtable** out);
/* Pointwise negation: the table of -L(p,q). */
LENSD_API lensd_status lensd_dtable_reverse(const lensd_dtable* table, lensd_dtable** out);
LENSD_API void lensd_dtable_destroy(lensd_dtable* table);

LENSD_API int64_t lensd_dtable_p(const lensd_dtable* table);
LENSD_API int64_t lensd_dtable_q(const lensd_dtable* table);
LENSD_API int lensd_dtable_is_reversed(const lensd_dtable* table);
/* Exact value as "num/den". Labels are reduced mod p. */
LENSD_API lensd_status lensd_dtable_value(const lensd_dtable* table, int64_t label,
                                          const char** value);
LENSD_API lensd_status lensd_dtable_value_approx(const lensd_dtable* table, int64_t label,
                                                 double* value);
LENSD_API lensd_status lensd_dtable_is_spin(const lensd_dtable* table, int64_t label, int* is_spin);

/* ---- classification ---------------------------------------------------- */

typedef struct lensd_verdict lensd_verdict;

LENSD_API lensd_status lensd_classify(int64_t p, int64_t q1, int64_t q2, lensd_verdict** out);
LENSD_API void lensd_verdict_destroy(lensd_verdict* verdict);

LENSD_API int lensd_verdict_homeomorphic(const lensd_verdict* verdict);
/* A spin-compatible d-preserving affine isomorphism exists. */
LENSD_API int lensd_verdict_d_iso_exists(const lensd_verdict* verdict);
/* homeomorphic == d_iso_exists. */
LENSD_API int lensd_verdict_consistent(const lensd_verdict* verdict);
LENSD_API int64_t lensd_verdict_witness_count(const lensd_verdict* verdict,
                                              int spin_compatible_only);
/* Witness i -> [offset + unit * i]_p. */
LENSD_API lensd_status lensd_verdict_witness(const lensd_verdict* verdict, int spin_compatible_only,
                                             int64_t index, int64_t* offset, int64_t* unit);

/* ---- image of the relative invariant mod p ------------------------------ */

typedef struct lensd_sbar lensd_sbar;

LENSD_API lensd_status lensd_sbar_create(int64_t p, int64_t q, lensd_sbar** out);
LENSD_API void lensd_sbar_destroy(lensd_sbar* sbar);

LENSD_API int lensd_sbar_is_prime(const lensd_sbar* sbar);
LENSD_API int64_t lensd_sbar_spin(const lensd_sbar* sbar);
LENSD_API int64_t lensd_sbar_member_count(const lensd_sbar* sbar);
/* Members in ascending order. */
LENSD_API lensd_status lensd_sbar_member(const lensd_sbar* sbar, int64_t index, int64_t* value,
                                         int64_t* multiplicity);
/* 1 if the members equal the Legendre characterization, 0 if not, -1 when p
 * is not an odd prime. */
LENSD_API int lensd_sbar_characterization(const lensd_sbar* sbar);

/* ---- verification sweeps ----------------------------------------------- */

typedef struct lensd_report lensd_report;

LENSD_API int lensd_is_suite_name(const char* suite);
/* suite: shift, spin, lemma3, theorem1, keyeq, theorem2, lemma4, lemma5 or
 * all. profile: "quick" or "full" (NULL means full). p_max > 0 overrides the
 * profile's cap for every selected suite. */
LENSD_API lensd_status lensd_verify(const char* suite, const char* profile, int64_t p_max,
                                    lensd_report** out);
LENSD_API void lensd_report_destroy(lensd_report* report);

LENSD_API const char* lensd_report_suite(const lensd_report* report);
LENSD_API int lensd_report_passed(const lensd_report* report);
LENSD_API int64_t lensd_report_counterexample_count(const lensd_report* report);
/* Only the first few counterexamples are stored. */
LENSD_API int64_t lensd_report_stored_counterexamples(const lensd_report* report);
LENSD_API const char* lensd_report_counterexample(const lensd_report* report, int64_t index);
LENSD_API int64_t lensd_report_row_count(const lensd_report* report);
LENSD_API lensd_status lensd_report_row(const lensd_report* report, int64_t index,
                                        const char** param, int64_t* checked, int64_t* passed);
LENSD_API int64_t lensd_report_note_count(const lensd_report* report);
LENSD_API lensd_status lensd_report_note(const lensd_report* report, int64_t index,
                                         const char** key, const char** value);

#ifdef __cplusplus
}
#endif

#endif /* LENSD_LENSD_H */
