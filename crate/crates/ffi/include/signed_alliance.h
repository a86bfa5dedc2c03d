#ifndef SIGNED_ALLIANCE_H
#define SIGNED_ALLIANCE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SDA_NO_VERTEX SIZE_MAX



typedef enum SdaStatus {
  SDA_STATUS_OK = 0,
  /**
   * Well-posed negative answer: not an alliance, or nothing within the bound.
   */
  SDA_STATUS_NO_SOLUTION = 1,
  SDA_STATUS_NULL_POINTER = 2,
  SDA_STATUS_INVALID_UTF8 = 3,
  SDA_STATUS_PARSE = 4,
  SDA_STATUS_UNKNOWN_VERTEX = 5,
  SDA_STATUS_INVALID_ARGUMENT = 6,
  SDA_STATUS_PRECONDITION = 7,
  SDA_STATUS_IO = 8,
  SDA_STATUS_INTERNAL = 9,
} SdaStatus;

/**
 * Opaque graph handle.
 */
typedef struct SdaGraph SdaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *sda_last_error(void);

/**
 * Parses `.sg` edge-list text into a new graph stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SdaStatus sda_graph_parse(const char *text, struct SdaGraph **out);

/**
 * Reads an `.sg` file into a new graph stored in `*out`.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SdaStatus sda_graph_read(const char *path, struct SdaGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void sda_graph_free(struct SdaGraph *g);

/**
 * Vertex count, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sda_graph_vertex_count(const struct SdaGraph *g);

/**
 * Edge count, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sda_graph_edge_count(const struct SdaGraph *g);

/**
 * Index of the vertex named `label`.
 *
 * # Safety
 * `g` must be a live handle, `label` NUL-terminated, `out` valid.
 */
enum SdaStatus sda_graph_index_of(const struct SdaGraph *g, const char *label, size_t *out);

/**
 * Label of vertex `v` as a new string.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum SdaStatus sda_graph_label(const struct SdaGraph *g, size_t v, char **out);

/**
 * `Ok` when the `len` vertices at `set` form a defensive alliance,
 * `NoSolution` when they do not. A report is stored in `*report_json` unless
 * it is null.
 *
 * # Safety
 * `set` must hold `len` indices; `report_json` must be null or valid.
 */
enum SdaStatus sda_check_alliance(const struct SdaGraph *g,
                                  const size_t *set,
                                  size_t len,
                                  char **report_json);

/**
 * Minimum alliance of size at most `k` containing `required` (or any, for
 * [`SDA_NO_VERTEX`]), chosen by the automatic solver dispatch. The result
 * document goes to `*result_json`.
 *
 * # Safety
 * `g` must be a live handle and `result_json` valid.
 */
enum SdaStatus sda_min_alliance(const struct SdaGraph *g,
                                size_t k,
                                size_t required,
                                char **result_json);

/**
 * Minimum sign-flip plan turning `target` into an alliance within budget `k`.
 * `literal` selects the literal reduction rule instead of the corrected one.
 *
 * # Safety
 * `target` must hold `len` indices and `plan_json` be valid.
 */
enum SdaStatus sda_build(const struct SdaGraph *g,
                         const size_t *target,
                         size_t len,
                         size_t k,
                         bool literal,
                         char **plan_json);

/**
 * Structural parameter report.
 *
 * # Safety
 * `g` must be a live handle and `report_json` valid.
 */
enum SdaStatus sda_analyze(const struct SdaGraph *g, char **report_json);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sda_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIGNED_ALLIANCE_H */
