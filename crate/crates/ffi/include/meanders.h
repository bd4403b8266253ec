#ifndef MEANDERS_H
#define MEANDERS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MeandersStatus {
  MEANDERS_STATUS_OK = 0,
  MEANDERS_STATUS_NULL_POINTER = 1,
  MEANDERS_STATUS_INVALID_ARGUMENT = 2,
  MEANDERS_STATUS_INVALID_INPUT = 3,
  MEANDERS_STATUS_INTERNAL = 4,
} MeandersStatus;

/**
 * Opaque handle to a meander system.
 */
typedef struct MeandersSystem MeandersSystem;

typedef struct MeandersSpecialCounts {
  uint64_t ringlets;
  uint64_t rings;
  uint64_t staples;
  uint64_t upper_staples;
  uint64_t lower_staples;
} MeandersSpecialCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *meanders_last_error(void);

/**
 * Draws replicate `index` of family `family` (for example `"uniform"`,
 * `"comb"`, `"sg(1,0,1)"`) at half-size `n` with the given seed.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `out` a writable pointer.
 */
enum MeandersStatus meanders_sample(const char *family,
                                    size_t n,
                                    uint64_t seed,
                                    uint64_t index,
                                    struct MeandersSystem **out);

/**
 * Builds a system from two 0-based partner arrays of length `len = 2n`.
 *
 * # Safety
 * `upper` and `lower` must each point to `len` readable values.
 */
enum MeandersStatus meanders_system_from_partners(const uint32_t *upper,
                                                  const uint32_t *lower,
                                                  size_t len,
                                                  struct MeandersSystem **out);

/**
 * Parses `{"n": .., "upper": [..], "lower": [..]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum MeandersStatus meanders_system_from_json(const char *json, struct MeandersSystem **out);

/**
 * Renders a system as JSON. Release the string with
 * `meanders_string_free`.
 *
 * # Safety
 * `system` must be a live handle and `out` a writable pointer.
 */
enum MeandersStatus meanders_system_to_json(const struct MeandersSystem *system, char **out);

/**
 * Half-size of the system, or 0 for a null handle.
 *
 * # Safety
 * `system` must be NULL or a live handle.
 */
size_t meanders_system_n(const struct MeandersSystem *system);

/**
 * Copies the partner arrays into caller buffers of length `len`, which
 * must equal `2n`.
 *
 * # Safety
 * `upper` and `lower` must each point to `len` writable values.
 */
enum MeandersStatus meanders_system_partners(const struct MeandersSystem *system,
                                             uint32_t *upper,
                                             uint32_t *lower,
                                             size_t len);

/**
 * # Safety
 * `system` must be NULL or a handle not yet freed.
 */
void meanders_system_free(struct MeandersSystem *system);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void meanders_string_free(char *s);

/**
 * # Safety
 * `system` must be a live handle and `out` a writable pointer.
 */
enum MeandersStatus meanders_count_cycles(const struct MeandersSystem *system, uint64_t *out);

/**
 * # Safety
 * `system` must be a live handle and `out` a writable pointer.
 */
enum MeandersStatus meanders_largest_half_length(const struct MeandersSystem *system,
                                                 uint64_t *out);

/**
 * # Safety
 * `system` must be a live handle and `out` a writable pointer.
 */
enum MeandersStatus meanders_special_counts(const struct MeandersSystem *system,
                                            struct MeandersSpecialCounts *out);

/**
 * Exact mean number of ringlets in a uniform system of half-size `n`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum MeandersStatus meanders_expected_ringlets(size_t n, double *out);

/**
 * # Safety
 * `out` must be a writable pointer.
 */
enum MeandersStatus meanders_expected_rings(size_t n, double *out);

/**
 * # Safety
 * `out` must be a writable pointer.
 */
enum MeandersStatus meanders_expected_staples(size_t n, double *out);

/**
 * Limiting probability that a relaxed two-block rainbow has `x` cycles.
 * Returns NaN for `x = 0`.
 */
double meanders_rainbow_gcd_law(uint64_t x);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MEANDERS_H */
