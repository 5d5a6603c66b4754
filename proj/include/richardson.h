/* C interface to the Richardson variety decomposition library.
 *
 * All functions return rc_status; RC_OK means success. Output strings are
 * heap allocated UTF-8 owned by the caller, released with rc_string_free.
 * On failure rc_last_error() returns a thread-local message describing the
 * most recent error in the calling thread.
 */
#ifndef RICHARDSON_H
#define RICHARDSON_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
    RC_OK = 0,
    RC_VERIFY_FAILED = 1, /* a verification sweep found a failing check */
    RC_BAD_INPUT = 2,     /* malformed shape, prime, or permutation */
    RC_INADMISSIBLE = 3,  /* diagram requested for an inadmissible w */
    RC_INTERNAL = 4       /* internal consistency failure */
} rc_status;

typedef enum rc_kind { RC_KIND_GAUSS = 0, RC_KIND_DEODHAR = 1 } rc_kind;

/* Opaque handle for a pair (I, J) of d-subsets of [n]. */
typedef struct rc_shape rc_shape;

const char* rc_version(void);
const char* rc_last_error(void);
void rc_string_free(char* s);

/* I and J are arrays of d strictly increasing 1-based column indices. */
rc_status rc_shape_create(int n, int d, const int* I, const int* J, rc_shape** out);
void rc_shape_free(rc_shape* sh);

/* Strata table with per-stratum and total mixed Hodge polynomials:
 * {shape, kind, strata:[{w, alpha, beta, mixpol}], mixpol}. */
rc_status rc_strata_json(const rc_shape* sh, rc_kind kind, char** out_json);

/* Cohomology of the model complex: mixPol of H, its point-count
 * specialization, representative cocycles, and optionally the category-O
 * polynomial with the change of variables applied plus an equality flag. */
rc_status rc_poincare_json(const rc_shape* sh, int with_lie, char** out_json);

/* Decorated Fukaya diagram for w (array of d 1-based values). */
rc_status rc_diagram_text(const rc_shape* sh, rc_kind kind, const int* w, char** out_text);
rc_status rc_diagram_svg(const rc_shape* sh, rc_kind kind, const int* w, char** out_svg);

/* Number of F_p points of the open Richardson variety. */
rc_status rc_point_count(const rc_shape* sh, int prime, long long* out_count);

/* Consistency sweep over all comparable pairs in Gr(d, n); prime = 0 skips
 * the finite field oracle. Returns RC_VERIFY_FAILED when a check fails;
 * out_json always receives {checks:{name:bool}, passed, failed}. */
rc_status rc_verify_json(int n, int d, int prime, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* RICHARDSON_H */
