/* C interface for the tqs library: exact decisions for two-dimensional
 * tame quotient singularities of type R.
 *
 * Every function returns a TqsStatus; results travel through out pointers.
 * A thread-local message describing the most recent failure is available
 * via tqs_last_error(). Group handles are opaque and must be released with
 * tqs_group_free().
 *
 * This header is maintained by hand against crates/tqs-capi/src/lib.rs;
 * the C smoke test (tests/c_smoke.rs, which compiles and runs
 * tests/driver.c against this header) keeps the two in sync.
 */

#ifndef TQS_H
#define TQS_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, aligned with the CLI exit codes. */
typedef enum TqsStatus {
  TQS_OK = 0,
  TQS_NULL_POINTER = 1,
  TQS_INVALID_ARGUMENT = 2,
  TQS_TOO_LARGE = 3,
  TQS_INTERNAL = 4,
  TQS_BUFFER_TOO_SMALL = 5,
} TqsStatus;

/* Kind tag for tqs_group_singularity. */
typedef enum TqsSingularityKind {
  TQS_SINGULARITY_SMOOTH = 0,
  TQS_SINGULARITY_CYCLIC = 1,
  TQS_SINGULARITY_NONCYCLIC_QUOTIENT = 2,
} TqsSingularityKind;

/* Opaque handle to a finite matrix group. */
typedef struct TqsGroup TqsGroup;

/* Library version as a static NUL-terminated string. */
const char *tqs_version(void);

/* Copy the most recent error message into buf (NUL-terminated, truncating);
 * returns the full message length in bytes without the NUL. */
size_t tqs_last_error(char *buf, size_t cap);

/* Hirzebruch-Jung expansion of n/d. Writes at most cap terms to out and
 * stores the full length in written; fails with TQS_BUFFER_TOO_SMALL when
 * the expansion does not fit. */
TqsStatus tqs_hj_expand(uint64_t n, uint64_t d, uint64_t *out, size_t cap,
                        size_t *written);

/* Critical-pair decision for (n, d); both criteria are evaluated and must
 * agree. */
TqsStatus tqs_is_critical_pair(uint64_t n, uint64_t d, bool *out);

/* Type-R decision for the singularity 1/n(1,d) in characteristic p
 * (p = 0 or a prime not dividing n). */
TqsStatus tqs_is_type_r(uint64_t n, uint64_t d, uint64_t p, bool *out);

/* The inverse of d modulo n, in 1..=n. */
TqsStatus tqs_mod_inverse(uint64_t d, uint64_t n, uint64_t *out);

/* Closed-form R2 decision for the abelian group with the given cyclic
 * factors (any factor list; it is normalized internally). */
TqsStatus tqs_abelian_is_r2(const uint64_t *factors, size_t len, bool *out);

/* Build a group from the JSON generator format (fields `conductor` and
 * `generators`). On success the handle must be released with
 * tqs_group_free(). */
TqsStatus tqs_group_from_json(const char *json, uint64_t max_order,
                              TqsGroup **out);

/* Build one member of the nine families by tag (for example "muS4").
 * m is required for the D-families and must be 0 otherwise. */
TqsStatus tqs_group_from_family(const char *name, uint64_t q, uint64_t m,
                                uint64_t max_order, TqsGroup **out);

/* Expected not-R flag of a family member per the classification table. */
TqsStatus tqs_family_predicted_not_r(const char *name, uint64_t q, uint64_t m,
                                     bool *out);

/* Group order (0 for a null handle). */
uint64_t tqs_group_order(const TqsGroup *g);

/* Order of the subgroup of scalar matrices (0 on failure). */
uint64_t tqs_group_center_order(const TqsGroup *g);

/* Order of the subgroup generated by pseudoreflections (0 on failure). */
uint64_t tqs_group_reflection_order(const TqsGroup *g);

/* Isomorphism type of the image in PGL_2 as a short tag ("C6", "D4", "A5"). */
TqsStatus tqs_group_pgl_image(const TqsGroup *g, char *buf, size_t cap);

/* Classify the quotient singularity of the group. For the cyclic kind the
 * normalized type 1/n(1,d) is stored in out_n/out_d; otherwise both are set
 * to 1. out_type_r is the type-R verdict in characteristic 0. */
TqsStatus tqs_group_singularity(const TqsGroup *g, TqsSingularityKind *out_kind,
                                uint64_t *out_n, uint64_t *out_d,
                                bool *out_type_r);

/* Release a group handle. Null is tolerated. */
void tqs_group_free(TqsGroup *g);

#ifdef __cplusplus
}
#endif

#endif /* TQS_H */
