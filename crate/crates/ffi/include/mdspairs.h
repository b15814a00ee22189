/* C interface to the mdspairs library. */

#ifndef MDSPAIRS_H
#define MDSPAIRS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Feasibility classification of a parameter tuple.
 */
typedef enum MpFeasibility {
  MP_FEASIBILITY_FEASIBLE = 0,
  MP_FEASIBILITY_INFEASIBLE_PROVEN = 1,
  MP_FEASIBILITY_OUT_OF_SCOPE_TUPLE = 2,
  MP_FEASIBILITY_INVALID_TUPLE = 3,
} MpFeasibility;

/**
 * Result codes shared by every fallible call.
 */
typedef enum MpStatus {
  MP_STATUS_OK = 0,
  MP_STATUS_INVALID_ARGUMENT = 1,
  MP_STATUS_INFEASIBLE = 2,
  MP_STATUS_OUT_OF_SCOPE = 3,
  MP_STATUS_INTERNAL_DEFECT = 4,
  MP_STATUS_NULL_POINTER = 5,
} MpStatus;

/**
 * A derived quantum parameter set together with its underlying pair.
 */
typedef struct MpAeaqecc MpAeaqecc;

/**
 * A verified intersection pair together with the request it answers.
 */
typedef struct MpPair MpPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The default message-enumeration bound used when 0 is passed.
 */
uint64_t mp_default_enum_bound(void);

/**
 * The most recent error message on this thread, or NULL. Free with
 * `mp_string_free`.
 */
char *mp_last_error_message(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void mp_string_free(char *s);

/**
 * Classifies a parameter tuple.
 */
enum MpFeasibility mp_feasible(uint64_t q, uint64_t n, uint64_t k1, uint64_t k2, uint64_t l);

/**
 * Full feasibility report as a JSON string (free with `mp_string_free`);
 * NULL when the tuple itself is malformed.
 */
char *mp_feasible_json(uint64_t q, uint64_t n, uint64_t k1, uint64_t k2, uint64_t l);

/**
 * Constructs and verifies an intersection pair. On success writes a handle
 * to `out`; pass `enum_bound = 0` for the default verification bound.
 *
 * # Safety
 * `out` must be null or point to writable storage for one pointer.
 */
enum MpStatus mp_pair_build(uint64_t q,
                            uint64_t n,
                            uint64_t k1,
                            uint64_t k2,
                            uint64_t l,
                            uint64_t enum_bound,
                            struct MpPair **out);

/**
 * Frees a pair handle. NULL is ignored.
 *
 * # Safety
 * `p` must have come from `mp_pair_build` and not been freed before.
 */
void mp_pair_free(struct MpPair *p);

/**
 * Verified intersection dimension, or -1 on NULL.
 *
 * # Safety
 * `p` must be null or a live handle from `mp_pair_build`.
 */
int64_t mp_pair_l_verified(const struct MpPair *p);

/**
 * Construction route tag (free with `mp_string_free`), or NULL.
 *
 * # Safety
 * `p` must be null or a live handle from `mp_pair_build`.
 */
char *mp_pair_route(const struct MpPair *p);

/**
 * Full pair record as JSON (free with `mp_string_free`), or NULL.
 *
 * # Safety
 * `p` must be null or a live handle from `mp_pair_build`.
 */
char *mp_pair_to_json(const struct MpPair *p);

/**
 * Runs the pure-MDS pipeline: builds the pair, derives the quantum
 * parameters by exhaustive enumeration, and checks them against the
 * closed-form claim.
 *
 * # Safety
 * `out` must be null or point to writable storage for one pointer.
 */
enum MpStatus mp_aeaqecc_build(uint64_t q,
                               uint64_t n,
                               uint64_t k1,
                               uint64_t k2,
                               uint64_t l,
                               uint64_t enum_bound,
                               struct MpAeaqecc **out);

/**
 * Frees a quantum-parameter handle. NULL is ignored.
 *
 * # Safety
 * `a` must have come from `mp_aeaqecc_build` and not been freed before.
 */
void mp_aeaqecc_free(struct MpAeaqecc *a);

/**
 * Code length, or -1 on NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
int64_t mp_aeaqecc_n(const struct MpAeaqecc *a);

/**
 * Logical dimension, or -1 on NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
int64_t mp_aeaqecc_k(const struct MpAeaqecc *a);

/**
 * Phase-flip distance, or -1 on NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
int64_t mp_aeaqecc_dz(const struct MpAeaqecc *a);

/**
 * Qudit-flip distance, or -1 on NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
int64_t mp_aeaqecc_dx(const struct MpAeaqecc *a);

/**
 * Maximally entangled state count, or -1 on NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
int64_t mp_aeaqecc_c(const struct MpAeaqecc *a);

/**
 * 1 when both distances equal the dual minimum weights, 0 otherwise,
 * -1 on NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
int32_t mp_aeaqecc_is_pure(const struct MpAeaqecc *a);

/**
 * 1 when dx + dz = n - k + c + 2, 0 otherwise, -1 on NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
int32_t mp_aeaqecc_is_mds(const struct MpAeaqecc *a);

/**
 * Full record as JSON (free with `mp_string_free`), or NULL.
 *
 * # Safety
 * `a` must be null or a live handle from `mp_aeaqecc_build`.
 */
char *mp_aeaqecc_to_json(const struct MpAeaqecc *a);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MDSPAIRS_H */
