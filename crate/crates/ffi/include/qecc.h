#ifndef QECC_H
#define QECC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum QeccStatus {
  QECC_STATUS_OK = 0,
  QECC_STATUS_NULL_POINTER = 1,
  QECC_STATUS_INVALID_UTF8 = 2,
  QECC_STATUS_PARSE = 3,
  QECC_STATUS_UNKNOWN_CODE = 4,
  QECC_STATUS_INVALID_ARGUMENT = 5,
  QECC_STATUS_SCALE_CAP = 6,
  QECC_STATUS_INVALID_CODE = 7,
  QECC_STATUS_INTERNAL = 8,
} QeccStatus;

/**
 * A code with explicit code vectors (signed, or a plus code with all signs +1).
 */
typedef struct QeccCode QeccCode;

/**
 * Bundled code registry.
 */
typedef struct QeccRegistry QeccRegistry;

/**
 * Outcome of the state oracle.
 */
typedef struct QeccOracleResult {
  bool pass;
  uint64_t states;
  uint64_t conflict_count;
} QeccOracleResult;

/**
 * Quantum Hamming bound for `(n, K, t)`.
 */
typedef struct QeccBoundResult {
  bool satisfied;
  bool perfect;
} QeccBoundResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *qecc_last_error_message(void);

/**
 * Opens the bundled registry.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QeccStatus qecc_registry_bundled(struct QeccRegistry **out);

/**
 * # Safety
 * `reg` must be null or a handle from [`qecc_registry_bundled`], freed once.
 */
void qecc_registry_free(struct QeccRegistry *reg);

/**
 * Number of entries, or 0 for a null handle.
 *
 * # Safety
 * `reg` must be null or a live registry handle.
 */
size_t qecc_registry_len(const struct QeccRegistry *reg);

/**
 * Name of entry `index`; the string lives as long as the registry.
 *
 * # Safety
 * `reg` must be a live registry handle and `out` a valid pointer.
 */
enum QeccStatus qecc_registry_name(const struct QeccRegistry *reg, size_t index, const char **out);

/**
 * Builds the signed or plus code named `name` (aliases accepted).
 *
 * # Safety
 * `reg` must be a live registry handle, `name` a NUL-terminated string and
 * `out` a valid pointer.
 */
enum QeccStatus qecc_code_from_registry(const struct QeccRegistry *reg,
                                        const char *name,
                                        struct QeccCode **out);

/**
 * Builds a code from registry record text. Records may refer to bundled
 * entries by name.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum QeccStatus qecc_code_from_record(const char *text, struct QeccCode **out);

/**
 * # Safety
 * `code` must be null or a code handle, freed once.
 */
void qecc_code_free(struct QeccCode *code);

/**
 * Number of physical qubits, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live code handle.
 */
size_t qecc_code_n(const struct QeccCode *code);

/**
 * Number of encoded qubits, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live code handle.
 */
size_t qecc_code_k(const struct QeccCode *code);

/**
 * Runs the state oracle against all errors of weight at most `t`.
 *
 * # Safety
 * `code` must be a live code handle and `out` a valid pointer.
 */
enum QeccStatus qecc_verify_joint(const struct QeccCode *code,
                                  size_t t,
                                  struct QeccOracleResult *out);

/**
 * Runs the state oracle against `tx` amplitude and `tz` phase errors.
 *
 * # Safety
 * `code` must be a live code handle and `out` a valid pointer.
 */
enum QeccStatus qecc_verify_pair(const struct QeccCode *code,
                                 size_t tx,
                                 size_t tz,
                                 struct QeccOracleResult *out);

/**
 * Full code-vector listing; release it with [`qecc_string_free`].
 *
 * # Safety
 * `code` must be a live code handle and `out` a valid pointer.
 */
enum QeccStatus qecc_code_listing(const struct QeccCode *code, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void qecc_string_free(char *s);

/**
 * Evaluates the quantum Hamming bound.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum QeccStatus qecc_hamming_bound(size_t n, size_t k, size_t t, struct QeccBoundResult *out);

/**
 * Smallest `n` allowed by the quantum Hamming bound for `K` and `t`.
 */
size_t qecc_min_n_for(size_t k, size_t t);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QECC_H */
