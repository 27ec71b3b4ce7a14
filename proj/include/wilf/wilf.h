/* Copyright (c) Wilf toolkit contributors. */
/* SPDX-License-Identifier: Apache-2.0 */
#ifndef WILF_WILF_H
#define WILF_WILF_H

/*
 * C interface to the numerical-semigroup toolkit.
 *
 * Conventions:
 *   - Functions that can fail return wilf_status; WILF_OK is 0.
 *   - On failure, wilf_last_error() returns a one-line diagnostic for the
 *     calling thread (valid until its next API call).
 *   - Objects are opaque handles released with their matching _free call.
 *   - Report functions allocate their output strings with malloc; release
 *     them with wilf_string_free.
 *   - All rationals are reduced integer pairs; nothing is computed in
 *     floating point.
 */

#include <stddef.h>
#include <stdint.h>

#ifndef WILF_API
#define WILF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wilf_status {
    WILF_OK = 0,
    WILF_ERR_INVALID_ARGUMENT = 1,
    WILF_ERR_GCD_NOT_ONE = 2,
    WILF_ERR_INVALID_GAP_SET = 3,
    WILF_ERR_OVERFLOW = 4,
    WILF_ERR_FULL_SEMIGROUP = 5,
    WILF_ERR_UNSUPPORTED_EMBEDDING_DIM = 6,
    WILF_ERR_CAP_EXCEEDED = 7,
    WILF_ERR_WITNESS_NOT_FOUND = 8,
    WILF_ERR_MISMATCHED_INPUTS = 9,
    WILF_ERR_INTERNAL = 10,
    WILF_ERR_NOMEM = 11
} wilf_status;

/* Stable identifier strings ("WILF_OK", "WILF_ERR_OVERFLOW", ...). */
WILF_API const char* wilf_status_name(wilf_status status);

/* Diagnostic for the most recent failure on this thread; never NULL. */
WILF_API const char* wilf_last_error(void);

WILF_API void wilf_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Semigroups                                                          */

typedef struct wilf_semigroup wilf_semigroup;

/* Smallest numerical semigroup containing the generators; their gcd must
 * be 1. Fails with WILF_ERR_GCD_NOT_ONE otherwise. */
WILF_API wilf_status wilf_semigroup_from_generators(const int64_t* generators, size_t count,
                                                    wilf_semigroup** out);

/* Complement of the given finite gap set; the complement must be closed
 * under addition (WILF_ERR_INVALID_GAP_SET otherwise). An empty list gives
 * the full semigroup N. */
WILF_API wilf_status wilf_semigroup_from_gaps(const int64_t* gaps, size_t count,
                                              wilf_semigroup** out);

/* Child in the semigroup tree: removes a minimal generator that exceeds
 * the Frobenius number. */
WILF_API wilf_status wilf_semigroup_child(const wilf_semigroup* s, int64_t atom,
                                          wilf_semigroup** out);

WILF_API void wilf_semigroup_free(wilf_semigroup* s);

/* Membership test; negative n is never a member. */
WILF_API int wilf_semigroup_contains(const wilf_semigroup* s, int64_t n);

/* Frobenius number; -1 for the full semigroup N. */
WILF_API int64_t wilf_semigroup_frobenius(const wilf_semigroup* s);
WILF_API int64_t wilf_semigroup_genus(const wilf_semigroup* s);
WILF_API int64_t wilf_semigroup_multiplicity(const wilf_semigroup* s);
WILF_API int64_t wilf_semigroup_embedding_dim(const wilf_semigroup* s);

/* Copies the minimal generators (ascending) into buf. Sets *out_count to
 * the total; fails with WILF_ERR_INVALID_ARGUMENT when cap is too small. */
WILF_API wilf_status wilf_semigroup_atoms(const wilf_semigroup* s, int64_t* buf, size_t cap,
                                          size_t* out_count);

/* ------------------------------------------------------------------ */
/* Invariants and bounds                                               */

typedef struct wilf_invariants {
    int64_t frobenius;
    int64_t genus;
    int64_t multiplicity;
    int64_t embedding_dim;
    int64_t sporadic_count; /* f + 1 - genus */
    int64_t density_num;    /* Wilf density (f+1-genus)/(f+1), reduced */
    int64_t density_den;
    int64_t wilf_number; /* e*(f+1-g) - (f+1) */
} wilf_invariants;

/* Fails with WILF_ERR_FULL_SEMIGROUP for S = N. */
WILF_API wilf_status wilf_semigroup_invariants(const wilf_semigroup* s, wilf_invariants* out);

enum {
    WILF_BOUND_WILF_1 = 0,     /* d >= 1/e */
    WILF_BOUND_ZHAI_2 = 1,     /* d >= 1/e - (m-1)(e-2)/(2e(f+1)) */
    WILF_BOUND_LEMMA_3 = 2,    /* (e-1)(f+1-g) >= m-1 */
    WILF_BOUND_TWO_STAR = 3,   /* 2(f+1) <= 2e(f+1-g) + (e-2)(m-1) */
    WILF_BOUND_THREE_STAR = 4, /* m-1 <= (e-1)(f+1-g) */
    WILF_BOUND_PROP_A = 5,     /* e in {4,5} only */
    WILF_BOUND_PROP_B = 6,     /* d >= 2/(e^2-e+2) */
    WILF_BOUND_COUNT = 7
};

/* Report tag for a bound id ("WILF_1", ...); NULL for an invalid id. */
WILF_API const char* wilf_bound_tag(int bound_id);

enum {
    WILF_BRANCH_NONE = 0,
    WILF_BRANCH_CONDUCTOR_LE_3M = 1,
    WILF_BRANCH_CONDUCTOR_GT_3M = 2
};

typedef struct wilf_bound_check {
    int bound_id;
    int relation_ge; /* 1: lhs >= rhs is asserted; 0: lhs <= rhs */
    int strict;
    int64_t lhs_num, lhs_den;
    int64_t rhs_num, rhs_den;
    int64_t slack_num, slack_den; /* >= 0 iff the bound holds (> 0 if strict) */
    int holds;
    int is_equality;
    int branch; /* WILF_BRANCH_* (PROP_A only) */
} wilf_bound_check;

/* Evaluates one bound. PROP_A outside e in {4,5} fails with
 * WILF_ERR_UNSUPPORTED_EMBEDDING_DIM. */
WILF_API wilf_status wilf_check_bound(const wilf_semigroup* s, int bound_id,
                                      wilf_bound_check* out);

/* All applicable bounds in id order (PROP_A skipped unless e in {4,5}).
 * buf must hold WILF_BOUND_COUNT entries; *out_count gets the number
 * written. */
WILF_API wilf_status wilf_check_all(const wilf_semigroup* s, wilf_bound_check* buf,
                                    size_t* out_count);

/* ------------------------------------------------------------------ */
/* Witness cover for the covering lemma                                */

typedef struct wilf_witness_cover wilf_witness_cover;

WILF_API wilf_status wilf_witness_cover_build(const wilf_semigroup* s,
                                              wilf_witness_cover** out);
WILF_API void wilf_witness_cover_free(wilf_witness_cover* cover);

WILF_API int64_t wilf_witness_cover_size(const wilf_witness_cover* cover);

/* Checks m-1 <= |Y| <= (e-1)(f+1-g) against the same semigroup. */
WILF_API wilf_status wilf_witness_cover_verify(const wilf_witness_cover* cover,
                                               const wilf_semigroup* s, int* out_lower_holds,
                                               int* out_upper_holds);

/* ------------------------------------------------------------------ */
/* Enumeration                                                         */

/* Return 0 to continue, nonzero to stop the walk. The handle is only
 * valid during the call. */
typedef int (*wilf_visit_fn)(const wilf_semigroup* s, int64_t genus, void* user);

/* Visits every numerical semigroup of genus <= genus_bound exactly once
 * (the full semigroup N included), depth first. */
WILF_API wilf_status wilf_enumerate_tree(int64_t genus_bound, wilf_visit_fn visit, void* user,
                                         uint64_t* out_count);

/* Independent brute-force count of semigroups of exactly this genus
 * (capped; WILF_ERR_CAP_EXCEEDED above it). */
WILF_API wilf_status wilf_bruteforce_count(int64_t genus, uint64_t* out_count);

/* ------------------------------------------------------------------ */
/* Reports (JSON or CSV documents, rendered to malloc'd strings)       */

/* format: "json" or "csv". command_echo is copied verbatim into the
 * document envelope; NULL means empty. */

/* Invariants, bound checks, and the witness cover for one semigroup.
 * *out_all_hold is 1 when every check and the cover chain holds. */
WILF_API wilf_status wilf_report_inspect(const int64_t* generators, size_t count,
                                         const char* format, const char* command_echo,
                                         char** out_text, int* out_all_hold);

/* Exhaustive scan of 1 <= genus <= max_genus. bounds: "all" or a
 * comma-separated list of wilf,zhai,lemma3,two_star,three_star,prop_a,
 * prop_b. threads <= 0 selects the hardware default. *out_ok is 1 when
 * no counterexample was found; otherwise *out_counterexample (optional)
 * receives a one-line description. */
WILF_API wilf_status wilf_report_verify(int64_t max_genus, const char* bounds, int threads,
                                        const char* format, const char* command_echo,
                                        char** out_text, char** out_counterexample,
                                        int* out_ok);

/* Per-genus counts from the tree; oracle_check >= 0 recomputes counts for
 * genus <= oracle_check by brute force. *out_ok is 1 when the oracle agrees
 * (or was not requested). */
WILF_API wilf_status wilf_report_count(int64_t max_genus, int64_t oracle_check,
                                       const char* format, const char* command_echo,
                                       char** out_text, int* out_ok);

/* Top-k smallest slack for one bound; metric is a CLI bound name. */
WILF_API wilf_status wilf_report_extremal(int64_t max_genus, const char* metric, int64_t top_k,
                                          const char* format, const char* command_echo,
                                          char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* WILF_WILF_H */
