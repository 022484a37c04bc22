#ifndef CONEPROC_H
#define CONEPROC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ConeprocStatus {
  CONEPROC_STATUS_OK = 0,
  CONEPROC_STATUS_NULL_POINTER = 1,
  CONEPROC_STATUS_INVALID_INPUT = 2,
  CONEPROC_STATUS_DIMENSION_MISMATCH = 3,
  /**
   * The input parsed but describes the wrong kind of object.
   */
  CONEPROC_STATUS_WRONG_KIND = 4,
  CONEPROC_STATUS_PANIC = 5,
} ConeprocStatus;

typedef enum ConeprocProperty {
  CONEPROC_PROPERTY_REACHABILITY = 0,
  CONEPROC_PROPERTY_NULL_CONTROLLABILITY = 1,
} ConeprocProperty;

typedef enum ConeprocVerdict {
  CONEPROC_VERDICT_INFORMATIVE = 0,
  CONEPROC_VERDICT_NOT_INFORMATIVE = 1,
  CONEPROC_VERDICT_INCONCLUSIVE_ASSUMPTIONS = 2,
  CONEPROC_VERDICT_INDETERMINATE = 3,
} ConeprocVerdict;

typedef enum ConeprocPath {
  CONEPROC_PATH_THEOREM = 0,
  CONEPROC_PATH_ORACLE_FALLBACK = 1,
} ConeprocPath;

typedef enum ConeprocAnalysisStatus {
  CONEPROC_ANALYSIS_STATUS_HOLDS = 0,
  CONEPROC_ANALYSIS_STATUS_FAILS = 1,
  CONEPROC_ANALYSIS_STATUS_ASSUMPTIONS_NOT_MET = 2,
  CONEPROC_ANALYSIS_STATUS_INDETERMINATE = 3,
} ConeprocAnalysisStatus;

/**
 * Measured transitions.
 */
typedef struct ConeprocDataset ConeprocDataset;

/**
 * A convex process given by its graph cone.
 */
typedef struct ConeprocProcess ConeprocProcess;

/**
 * An informativity decision with its evidence.
 */
typedef struct ConeprocReport ConeprocReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *coneproc_version(void);

/**
 * Message for the most recent failure on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *coneproc_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void coneproc_string_free(char *s);

/**
 * Creates an empty data set of state dimension `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ConeprocStatus coneproc_dataset_new(size_t n, struct ConeprocDataset **out);

/**
 * Parses the JSON or CSV input format (data only).
 *
 * # Safety
 * `input` must be a NUL-terminated string and `out` writable.
 */
enum ConeprocStatus coneproc_dataset_from_text(const char *input, struct ConeprocDataset **out);

/**
 * Appends the pair `(x, y)` with integer entries; both arrays have `len`
 * entries, which must equal the state dimension.
 *
 * # Safety
 * `ds` must be a live handle; `x` and `y` must point to `len` values.
 */
enum ConeprocStatus coneproc_dataset_push_pair(struct ConeprocDataset *ds,
                                               const int64_t *x,
                                               const int64_t *y,
                                               size_t len);

/**
 * Appends the pair with entries `x_num[i] / x_den[i]`, `y_num[i] / y_den[i]`.
 *
 * # Safety
 * `ds` must be a live handle; all four arrays must hold `len` values.
 */
enum ConeprocStatus coneproc_dataset_push_rational_pair(struct ConeprocDataset *ds,
                                                        const int64_t *x_num,
                                                        const int64_t *x_den,
                                                        const int64_t *y_num,
                                                        const int64_t *y_den,
                                                        size_t len);

/**
 * Number of distinct nonzero pairs; 0 for NULL.
 *
 * # Safety
 * `ds` must be NULL or a live handle.
 */
size_t coneproc_dataset_len(const struct ConeprocDataset *ds);

/**
 * # Safety
 * `ds` must be NULL or a handle not yet freed.
 */
void coneproc_dataset_free(struct ConeprocDataset *ds);

/**
 * Decides informativity. `q_max = 0` selects the default horizon `2n`;
 * `fallback` only affects reachability.
 *
 * # Safety
 * `ds` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_decide(const struct ConeprocDataset *ds,
                                    enum ConeprocProperty property,
                                    bool fallback,
                                    size_t q_max,
                                    struct ConeprocReport **out);

/**
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_report_verdict(const struct ConeprocReport *report,
                                            enum ConeprocVerdict *out);

/**
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_report_path(const struct ConeprocReport *report,
                                         enum ConeprocPath *out);

/**
 * The report as JSON; free the string with [`coneproc_string_free`].
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_report_to_json(const struct ConeprocReport *report, char **out);

/**
 * # Safety
 * `report` must be NULL or a handle not yet freed.
 */
void coneproc_report_free(struct ConeprocReport *report);

/**
 * The most powerful unfalsified process of the data.
 *
 * # Safety
 * `ds` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_process_from_data(const struct ConeprocDataset *ds,
                                               struct ConeprocProcess **out);

/**
 * Parses a process description (graph generators, graph inequalities or
 * `A`, `B`, `C`); measured data are accepted too and become `H_D`.
 *
 * # Safety
 * `input` must be a NUL-terminated string and `out` writable.
 */
enum ConeprocStatus coneproc_process_from_text(const char *input, struct ConeprocProcess **out);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_process_negative_dual(const struct ConeprocProcess *p,
                                                   struct ConeprocProcess **out);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_process_positive_dual(const struct ConeprocProcess *p,
                                                   struct ConeprocProcess **out);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_process_inverse(const struct ConeprocProcess *p,
                                             struct ConeprocProcess **out);

/**
 * State dimension; 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t coneproc_process_dim(const struct ConeprocProcess *p);

/**
 * Whether `(x, y)` lies in the graph.
 *
 * # Safety
 * `p` must be a live handle, `x` and `y` must point to `len` values and
 * `out` must be writable.
 */
enum ConeprocStatus coneproc_process_contains_pair(const struct ConeprocProcess *p,
                                                   const int64_t *x,
                                                   const int64_t *y,
                                                   size_t len,
                                                   bool *out);

/**
 * Applies the theorem for `property` directly to the process.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_process_analyze(const struct ConeprocProcess *p,
                                             enum ConeprocProperty property,
                                             enum ConeprocAnalysisStatus *out);

/**
 * Canonical generators and inequalities of the graph as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ConeprocStatus coneproc_process_graph_json(const struct ConeprocProcess *p, char **out);

/**
 * # Safety
 * `p` must be NULL or a handle not yet freed.
 */
void coneproc_process_free(struct ConeprocProcess *p);

/**
 * One-shot decision from input text. `out_json` may be NULL; otherwise it
 * receives the report, to be freed with [`coneproc_string_free`].
 *
 * # Safety
 * `input` must be a NUL-terminated string, `out_verdict` writable and
 * `out_json` NULL or writable.
 */
enum ConeprocStatus coneproc_check_text(const char *input,
                                        enum ConeprocProperty property,
                                        bool fallback,
                                        enum ConeprocVerdict *out_verdict,
                                        char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONEPROC_H */
