#ifndef GPW_H
#define GPW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GpwStatus {
  GPW_STATUS_OK = 0,
  GPW_STATUS_NULL_ARGUMENT = 1,
  GPW_STATUS_INVALID_UTF8 = 2,
  GPW_STATUS_SYNTAX = 3,
  GPW_STATUS_UNKNOWN_REFERENCE = 4,
  GPW_STATUS_VALIDATION_FAILED = 5,
  /**
   * A computation between session objects failed, for instance modules over different algebras.
   */
  GPW_STATUS_COMPUTATION = 6,
  /**
   * The output buffer is too short.
   */
  GPW_STATUS_BUFFER_TOO_SMALL = 7,
  GPW_STATUS_PANIC = 8,
} GpwStatus;

typedef enum GpwFormat {
  GPW_FORMAT_TEXT = 0,
  GPW_FORMAT_STRUCTURED = 1,
} GpwFormat;

/**
 * The report of one run.
 */
typedef struct GpwReport GpwReport;

/**
 * A parsed and validated session.
 */
typedef struct GpwSession GpwSession;

typedef struct GpwCounts {
  size_t ok;
  size_t refuted;
  size_t infeasible;
  size_t error;
} GpwCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the library and valid
 * until the next failing call on the same thread.
 */
const char *gpw_last_error(void);

/**
 * Library version as a static string.
 */
const char *gpw_version(void);

/**
 * Parses and validates a session document.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum GpwStatus gpw_session_parse(const char *text, struct GpwSession **out);

/**
 * # Safety
 * `session` must be null or a handle from [`gpw_session_parse`] not yet freed.
 */
void gpw_session_free(struct GpwSession *session);

/**
 * # Safety
 * `session` must be a live handle and `out` writable.
 */
enum GpwStatus gpw_session_task_count(const struct GpwSession *session, size_t *out);

/**
 * Runs every task of the session.
 *
 * # Safety
 * `session` must be a live handle and `out` writable.
 */
enum GpwStatus gpw_session_run(const struct GpwSession *session, struct GpwReport **out);

/**
 * # Safety
 * `report` must be null or a handle from [`gpw_session_run`] not yet freed.
 */
void gpw_report_free(struct GpwReport *report);

/**
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum GpwStatus gpw_report_counts(const struct GpwReport *report, struct GpwCounts *out);

/**
 * Renders the report; the string is freed with [`gpw_string_free`].
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum GpwStatus gpw_report_emit(const struct GpwReport *report, enum GpwFormat format, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void gpw_string_free(char *s);

/**
 * `dim Hom(M, N)` for modules named in the session.
 *
 * # Safety
 * `session` must be a live handle, the names NUL-terminated and `out` writable.
 */
enum GpwStatus gpw_hom_dim(const struct GpwSession *session,
                           const char *m,
                           const char *n,
                           size_t *out);

/**
 * `dim Ext^i(M, N)` for `0 ≤ i ≤ i_max` into `dims`, which must hold `i_max + 1` entries.
 *
 * # Safety
 * `session` must be a live handle, the names NUL-terminated and `dims` writable for `len`
 * entries.
 */
enum GpwStatus gpw_ext_dims(const struct GpwSession *session,
                            const char *m,
                            const char *n,
                            size_t i_max,
                            size_t *dims,
                            size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GPW_H */
