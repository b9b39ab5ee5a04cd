#ifndef PYTH_FFI_H
#define PYTH_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by fallible calls.
 */
typedef enum PythStatus {
  PYTH_STATUS_OK = 0,
  PYTH_STATUS_NULL_POINTER = 1,
  PYTH_STATUS_INVALID_ARGUMENT = 2,
  PYTH_STATUS_NOT_PYTHAGOREAN = 3,
  PYTH_STATUS_NOT_PRIMITIVE = 4,
  PYTH_STATUS_PARITY_VIOLATION = 5,
  PYTH_STATUS_PARTITION_VIOLATION = 6,
  PYTH_STATUS_SIEVE_SOUNDNESS_VIOLATION = 7,
  PYTH_STATUS_OVERFLOW = 8,
  PYTH_STATUS_OUT_OF_RANGE = 9,
  PYTH_STATUS_INTERNAL = 10,
} PythStatus;

typedef enum PythClass {
  PYTH_CLASS_K1 = 1,
  PYTH_CLASS_K2 = 2,
  PYTH_CLASS_K3 = 3,
  PYTH_CLASS_K4 = 4,
  PYTH_CLASS_K5 = 5,
  PYTH_CLASS_K6 = 6,
} PythClass;

typedef enum PythVerdict {
  PYTH_VERDICT_PASS = 0,
  PYTH_VERDICT_NOT_APPLICABLE = 1,
  PYTH_VERDICT_FAIL = 2,
} PythVerdict;

/**
 * Opaque search outcome with its verdict.
 */
typedef struct PythReport PythReport;

/**
 * Opaque primitive triple.
 */
typedef struct PythTriple PythTriple;

/**
 * Opaque ordered enumerator of primitive triples.
 */
typedef struct PythTripleIter PythTripleIter;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *pyth_last_error(void);

/**
 * Validates `(a, b, c)` in either leg order and stores a new handle in `out`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum PythStatus pyth_triple_validate(uint64_t a, uint64_t b, uint64_t c, struct PythTriple **out);

/**
 * Builds the triple `(s² − t², 2st, s² + t²)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum PythStatus pyth_triple_from_params(uint64_t s, uint64_t t, struct PythTriple **out);

/**
 * Copies the members out; `Overflow` if any exceeds `uint64_t`.
 *
 * # Safety
 * `triple` must be a live handle; `a`, `b`, `c` must be valid writable pointers.
 */
enum PythStatus pyth_triple_members(const struct PythTriple *triple,
                                    uint64_t *a,
                                    uint64_t *b,
                                    uint64_t *c);

/**
 * # Safety
 * `triple` must be NULL or a handle not yet freed.
 */
void pyth_triple_free(struct PythTriple *triple);

/**
 * # Safety
 * `triple` must be a live handle; `out` a valid writable pointer.
 */
enum PythStatus pyth_triple_classify(const struct PythTriple *triple, enum PythClass *out);

/**
 * Reports whether `60 | abc` and `3 ∤ c`.
 *
 * # Safety
 * `triple` must be a live handle; the flag pointers must be writable.
 */
enum PythStatus pyth_triple_divisibility(const struct PythTriple *triple,
                                         bool *product_div_60,
                                         bool *c_not_div_3);

/**
 * Whether `μ·ν = b^(4k2+2)` for the split at `(k1, k2, k3)`.
 *
 * # Safety
 * `triple` must be a live handle; `holds` a valid writable pointer.
 */
enum PythStatus pyth_mu_nu_identity(const struct PythTriple *triple,
                                    uint32_t k1,
                                    uint32_t k2,
                                    uint32_t k3,
                                    bool *holds);

/**
 * Enumerator over primitive triples with `c ≤ c_max`, ascending by `(c, a)`.
 */
struct PythTripleIter *pyth_enumerate_new(uint64_t c_max);

/**
 * Stores the next triple in `out` and returns true, or returns false at the end.
 *
 * # Safety
 * `iter` must be a live enumerator; `out` a valid writable pointer.
 */
bool pyth_enumerate_next(struct PythTripleIter *iter, struct PythTriple **out);

/**
 * # Safety
 * `iter` must be NULL or an enumerator not yet freed.
 */
void pyth_enumerate_free(struct PythTripleIter *iter);

/**
 * Sieved search over `1 ≤ x, y, z ≤ bound` with a verdict for K1 ∪ K3.
 *
 * `moduli` may be NULL when `n_moduli` is 0; pass `use_default_moduli` to
 * ignore both and use the built-in set. `oracle_crosscheck` also enables the
 * audited exponent-shape pruning layer.
 *
 * # Safety
 * `triple` must be a live handle; `moduli` must point to `n_moduli` values
 * unless `n_moduli` is 0; `out` must be a valid writable pointer.
 */
enum PythStatus pyth_check(const struct PythTriple *triple,
                           uint32_t bound,
                           const uint64_t *moduli,
                           size_t n_moduli,
                           bool use_default_moduli,
                           bool oracle_crosscheck,
                           struct PythReport **out);

/**
 * # Safety
 * `report` must be a live handle.
 */
enum PythVerdict pyth_report_verdict(const struct PythReport *report);

/**
 * # Safety
 * `report` must be a live handle.
 */
size_t pyth_report_solution_count(const struct PythReport *report);

/**
 * # Safety
 * `report` must be a live handle; `x`, `y`, `z` valid writable pointers.
 */
enum PythStatus pyth_report_solution(const struct PythReport *report,
                                     size_t index,
                                     uint32_t *x,
                                     uint32_t *y,
                                     uint32_t *z);

/**
 * Lattice accounting: examined + pruned_by_sieve + pruned_by_magnitude = bound³.
 *
 * # Safety
 * `report` must be a live handle; the count pointers must be writable.
 */
enum PythStatus pyth_report_counts(const struct PythReport *report,
                                   uint64_t *examined,
                                   uint64_t *pruned_by_sieve,
                                   uint64_t *pruned_by_magnitude);

/**
 * The report as the JSON record written by `pyth check`.
 *
 * Free the result with [`pyth_string_free`]. Returns NULL on failure.
 *
 * # Safety
 * `report` must be a live handle.
 */
char *pyth_report_to_json(const struct PythReport *report);

/**
 * # Safety
 * `report` must be NULL or a handle not yet freed.
 */
void pyth_report_free(struct PythReport *report);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void pyth_string_free(char *s);

/**
 * Number of non-trivial solutions found by the `(s, t)` system scan.
 *
 * # Safety
 * `hits` must be a valid writable pointer.
 */
enum PythStatus pyth_lemma1_scan(uint64_t s_max, uint32_t exp_bound, uint64_t *hits);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PYTH_FFI_H */
