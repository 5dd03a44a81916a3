#ifndef SPORADIC_H
#define SPORADIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `SP_STATUS_OK` is zero; everything else is a failure.
 */
typedef enum SpStatus {
  SP_STATUS_OK = 0,
  SP_STATUS_NULL_POINTER = 1,
  SP_STATUS_INVALID_UTF8 = 2,
  SP_STATUS_PARSE = 3,
  SP_STATUS_VALIDATION = 4,
  SP_STATUS_NOT_FOUND = 5,
  SP_STATUS_OUT_OF_RANGE = 6,
  SP_STATUS_INVALID_ARGUMENT = 7,
  SP_STATUS_IO = 8,
  /**
   * The value does not fit the requested integer type.
   */
  SP_STATUS_OVERFLOW = 9,
  SP_STATUS_PANIC = 10,
} SpStatus;

/**
 * A data directory: manifest, tables, models and group metadata.
 */
typedef struct SpData SpData;

/**
 * Invariant counts `m_0..m_D` for one character.
 */
typedef struct SpProfile SpProfile;

/**
 * A validated character table.
 */
typedef struct SpTable SpTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *sp_last_error(void);

/**
 * Library version as a static string.
 */
const char *sp_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void sp_string_free(char *s);

/**
 * Opens a data directory containing `manifest.json`.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum SpStatus sp_data_open(const char *path, struct SpData **out);

/**
 * # Safety
 * `data` must be null or a handle from `sp_data_open`, not yet freed.
 */
void sp_data_free(struct SpData *data);

/**
 * Parses and validates a character table from JSON bytes.
 *
 * # Safety
 * `bytes` must point to `len` readable bytes; `out` must be writable.
 */
enum SpStatus sp_table_from_json(const uint8_t *bytes, size_t len, struct SpTable **out);

/**
 * Loads a shipped table by name.
 *
 * # Safety
 * `data` must be a live handle, `name` a NUL-terminated string and `out`
 * writable.
 */
enum SpStatus sp_data_table(const struct SpData *data, const char *name, struct SpTable **out);

/**
 * # Safety
 * `table` must be null or a table handle not yet freed.
 */
void sp_table_free(struct SpTable *table);

/**
 * # Safety
 * `table` must be a live handle; `classes` and `characters` writable.
 */
enum SpStatus sp_table_shape(const struct SpTable *table, size_t *classes, size_t *characters);

/**
 * Writes the table name as a new string.
 *
 * # Safety
 * `table` must be a live handle; `out` writable.
 */
enum SpStatus sp_table_name(const struct SpTable *table, char **out);

/**
 * Invariant counts up to `max_degree` for character `index` of `table`.
 *
 * # Safety
 * `table` must be a live handle; `out` writable.
 */
enum SpStatus sp_molien(const struct SpTable *table,
                        size_t index,
                        size_t max_degree,
                        struct SpProfile **out);

/**
 * Invariant counts for a sporadic group (through its plan) or a table name.
 *
 * # Safety
 * `data` must be a live handle, `name` a NUL-terminated string and `out`
 * writable.
 */
enum SpStatus sp_molien_group(const struct SpData *data,
                              const char *name,
                              size_t max_degree,
                              struct SpProfile **out);

/**
 * # Safety
 * `profile` must be null or a profile handle not yet freed.
 */
void sp_profile_free(struct SpProfile *profile);

/**
 * Number of coefficients, `D + 1`.
 *
 * # Safety
 * `profile` must be a live handle; `out` writable.
 */
enum SpStatus sp_profile_len(const struct SpProfile *profile, size_t *out);

/**
 * `m_d` as an unsigned 64-bit integer; `SP_OVERFLOW` if it does not fit.
 *
 * # Safety
 * `profile` must be a live handle; `out` writable.
 */
enum SpStatus sp_profile_coefficient(const struct SpProfile *profile, size_t degree, uint64_t *out);

/**
 * `m_d` in decimal, as a new string.
 *
 * # Safety
 * `profile` must be a live handle; `out` writable.
 */
enum SpStatus sp_profile_coefficient_str(const struct SpProfile *profile,
                                         size_t degree,
                                         char **out);

/**
 * The series in `1 + t^2 + ... + O(t^N)` notation, as a new string.
 *
 * # Safety
 * `profile` must be a live handle; `out` writable.
 */
enum SpStatus sp_profile_series(const struct SpProfile *profile, char **out);

/**
 * The dimension bound for a group: `dim P(V)` minus the number of
 * invariants in its plan.
 *
 * # Safety
 * `data` must be a live handle, `group` a NUL-terminated string and `out`
 * writable.
 */
enum SpStatus sp_bound(const struct SpData *data, const char *group, int64_t *out);

/**
 * Runs every check over the data directory. Writes the number of failed
 * checks and, if `report` is not null, the text report as a new string.
 *
 * # Safety
 * `data` must be a live handle; `failed` writable; `report` null or writable.
 */
enum SpStatus sp_verify(const struct SpData *data, size_t *failed, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPORADIC_H */
