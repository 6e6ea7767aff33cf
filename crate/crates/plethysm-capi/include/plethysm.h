#ifndef PLETHYSM_H
#define PLETHYSM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes: 0 success, 2 bad input, 3 budget exceeded, 4 internal error.
 */
#define PLETH_OK 0

#define PLETH_ERR_INPUT 2

#define PLETH_ERR_BUDGET 3

#define PLETH_ERR_INTERNAL 4

/**
 * Opaque engine handle with its expansion cache.
 */
typedef struct PlethEngine PlethEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an engine with the given degree budget (0 picks the default).
 */
struct PlethEngine *pleth_engine_new(unsigned int max_degree);

/**
 * Releases an engine handle.
 *
 * # Safety
 * `engine` must be a pointer returned by [`pleth_engine_new`], at most once.
 */
void pleth_engine_free(struct PlethEngine *engine);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer produced by one of the `pleth_*` functions.
 */
void pleth_string_free(char *s);

/**
 * `p(ν, μ, λ)` as a decimal string.
 *
 * # Safety
 * `engine` must be a live engine handle; partition arguments must be valid
 * NUL-terminated strings; `out` must be a valid pointer.
 */
int pleth_coefficient(const struct PlethEngine *engine,
                      const char *nu,
                      const char *mu,
                      const char *lambda,
                      char **out);

/**
 * Full Schur expansion of `s_ν ∘ s_μ` as a JSON record; when
 * `check_oracle` is nonzero the power-sum oracle is run as well and the
 * agreement flag is filled in.
 *
 * # Safety
 * Same contract as [`pleth_coefficient`].
 */
int pleth_expand_json(const struct PlethEngine *engine,
                      const char *nu,
                      const char *mu,
                      int check_oracle,
                      char **out);

/**
 * Multiplicity-freeness verdict; `out_verdict` receives 1 or 0 and the JSON
 * record (with the clause) is returned through `out`.
 *
 * # Safety
 * Partition arguments must be valid NUL-terminated strings; out-pointers
 * must be valid.
 */
int pleth_multiplicity_free(const char *nu, const char *mu, int *out_verdict, char **out);

/**
 * Witness certificate for a pair that is not multiplicity-free, as JSON.
 *
 * # Safety
 * Same contract as [`pleth_coefficient`].
 */
int pleth_witness_json(const struct PlethEngine *engine,
                       const char *nu,
                       const char *mu,
                       char **out);

/**
 * Spin split of `Dom(μ, ·)` — the expansions of `s_(2) ∘ s_μ` and
 * `s_(1²) ∘ s_μ` — as JSON.
 *
 * # Safety
 * Same contract as [`pleth_coefficient`].
 */
int pleth_domino_split_json(const struct PlethEngine *engine, const char *mu, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PLETHYSM_H */
