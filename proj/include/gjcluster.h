/* gjcluster.h -- C interface of the gjcluster shared library.
 *
 * Exact enumeration of words over a finite alphabet avoiding forbidden
 * subwords, built on the cluster method for noncommutative power series.
 * All results are delivered as heap-allocated strings (text or JSON) that
 * the caller releases with gjc_string_free(). Handles are opaque; every
 * function reports a gjc_status, and gjc_last_error() describes the most
 * recent failure on the calling thread.
 */

#ifndef GJCLUSTER_H
#define GJCLUSTER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gjc_status {
    GJC_OK = 0,
    GJC_ERR_INVALID_ARGUMENT = 1, /* bad value, parse failure, alphabet mismatch */
    GJC_ERR_LIMIT = 2,            /* an enumeration guard was exceeded */
    GJC_VERIFY_FAILED = 3,        /* verification ran and found a failing identity */
    GJC_ERR_INTERNAL = 4          /* invariant violation inside the library */
} gjc_status;

typedef enum gjc_format { GJC_FORMAT_TEXT = 0, GJC_FORMAT_JSON = 1 } gjc_format;

/* An alphabet plus forbidden words plus a truncation length. */
typedef struct gjc_problem gjc_problem;

const char* gjc_version(void);
const char* gjc_status_name(gjc_status status);

/* Message for the last failing call on this thread; empty when none. */
const char* gjc_last_error(void);

void gjc_string_free(char* s);

/* letters: array of letter tokens; forbidden: array of word strings in the
 * word text syntax (single-char tokens concatenate, multi-char tokens are
 * dot-separated). Forbidden words must have length >= 2. */
gjc_status gjc_problem_new(const char* const* letters, size_t n_letters,
                           const char* const* forbidden, size_t n_forbidden,
                           size_t max_len, gjc_problem** out);

/* spec_json: {"alphabet": ["a","b"], "forbidden": ["aa"], "max_len": 10,
 *             "t_value": -1}  (t_value optional) */
gjc_status gjc_problem_from_json(const char* spec_json, gjc_problem** out);

void gjc_problem_free(gjc_problem* p);

/* Numbers of avoiding words of each length 0..max_len. */
gjc_status gjc_count_avoiding(const gjc_problem* p, gjc_format fmt, char** out);

/* which: "avoiding" | "reciprocal" | "cluster-gf" | "occurrence-gf".
 * The polynomial series accept an optional evaluation point (has_t != 0);
 * the integer series reject one. */
gjc_status gjc_series(const gjc_problem* p, const char* which, int has_t,
                      long long t_value, gjc_format fmt, char** out);

/* Occurrences, clusters and the cluster polynomial of one word (both
 * computation methods when the forbidden set is reduced). */
gjc_status gjc_clusters(const gjc_problem* p, const char* word, gjc_format fmt, char** out);

/* method: "inversion" | "clusters" | "salient" | "all" (cross-checked). */
gjc_status gjc_m_table(const gjc_problem* p, const char* method, int include_zeros,
                       gjc_format fmt, char** out);

gjc_status gjc_salient(const gjc_problem* p, gjc_format fmt, char** out);

/* intervals_json: {"intervals": [[lo, hi], ...]} with inclusive integer
 * bounds. method: "recursive" | "crosscut" | "cluster" | "all". */
gjc_status gjc_mobius(const char* intervals_json, const char* method, int all_pairs,
                      gjc_format fmt, char** out);

/* Runs the full verification battery. Returns GJC_OK when every check
 * passes and GJC_VERIFY_FAILED otherwise; *out carries the report either
 * way. random_families seeded-random interval families are included. */
gjc_status gjc_verify(const gjc_problem* p, size_t random_families,
                      unsigned long long seed, gjc_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GJCLUSTER_H */
