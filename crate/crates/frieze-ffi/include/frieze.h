#ifndef FRIEZE_H
#define FRIEZE_H

/* Generated by cbindgen from the frieze-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define FRIEZE_OK 0

/**
 * A mathematical assertion failed (nonzero residual or determinant).
 */
#define FRIEZE_ASSERTION_FAILED 1

/**
 * Invalid input: bad JSON, bad parameters, out-of-range indices.
 */
#define FRIEZE_INVALID_INPUT 2

/**
 * A required pointer argument was null, or a string was not UTF-8.
 */
#define FRIEZE_NULL_POINTER 3

/**
 * S-subfrieze variant selectors for `frieze_s_diamond_check`.
 */
#define FRIEZE_S_PRIMARY 0

#define FRIEZE_S_ALTERNATE 1

/**
 * Opaque Heronian frieze handle.
 */
typedef struct FriezeHeronian FriezeHeronian;

/**
 * Opaque polygon handle.
 */
typedef struct FriezePolygon FriezePolygon;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a polygon from its JSON file format.
 */
int frieze_polygon_from_json(const char *json, FriezePolygon **out);

/**
 * Deterministic random polygon; identical arguments yield identical
 * polygons.
 */
int frieze_polygon_random(size_t n, uint64_t seed, uint64_t bound, FriezePolygon **out);

/**
 * Number of vertices, or 0 for a null handle.
 */
size_t frieze_polygon_order(const FriezePolygon *polygon);

/**
 * Serialize a polygon to its JSON file format.
 */
int frieze_polygon_to_json(const FriezePolygon *polygon, char **out);

void frieze_polygon_free(FriezePolygon *polygon);

/**
 * Build the polygonal Heronian frieze of a polygon.
 */
int frieze_build(const FriezePolygon *polygon, FriezeHeronian **out);

/**
 * Parse a frieze from its JSON export format.
 */
int frieze_from_json(const char *json, FriezeHeronian **out);

/**
 * Serialize a frieze to its JSON export format.
 */
int frieze_to_json(const FriezeHeronian *frieze, char **out);

void frieze_free(FriezeHeronian *frieze);

/**
 * Check every diamond equation and boundary condition of a frieze. Writes a
 * JSON report and returns FRIEZE_OK when all residuals vanish,
 * FRIEZE_ASSERTION_FAILED otherwise (the report lists the violations).
 */
int frieze_verify(const FriezeHeronian *frieze, char **report_out);

/**
 * Enumerate the Heronian minor relations of order n as a JSON array. With
 * `oracle` nonzero the brute-force oracle runs too and a disagreement
 * returns FRIEZE_ASSERTION_FAILED.
 */
int frieze_relations_json(size_t n, int oracle, char **out);

/**
 * Sweep all 4×4 S-subfrieze diamond determinants of a polygon (n >= 5).
 * FRIEZE_OK when every determinant vanishes and the S = 2m pairing holds.
 */
int frieze_s_diamond_check(const FriezePolygon *polygon, int variant, char **report_out);

/**
 * Sweep size×size Plücker-frieze diamond determinants over a polygon's
 * k-row matrix (k = 2 or 3). Vanishing is asserted when size = k + 1.
 */
int frieze_plucker_diamond_check(const FriezePolygon *polygon,
                                 size_t k,
                                 size_t size,
                                 char **report_out);

/**
 * Release a string returned by this library.
 */
void frieze_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRIEZE_H */
