#ifndef CUTKIT_H
#define CUTKIT_H

#include <stddef.h>

#if defined(CUTKIT_BUILDING_LIBRARY)
#define CUTKIT_API __attribute__((visibility("default")))
#else
#define CUTKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cutkit_graph cutkit_graph;

typedef enum cutkit_status {
  CUTKIT_OK = 0,
  CUTKIT_INVALID_INPUT = 1,
  CUTKIT_PARSE_ERROR = 2,
  CUTKIT_INFEASIBLE = 3,
  CUTKIT_BUDGET_EXCEEDED = 4,
  CUTKIT_NUMERICAL_ERROR = 5,
  CUTKIT_INTERNAL_ERROR = 6
} cutkit_status;

/* Message for the last failing call on this thread; empty after success. */
CUTKIT_API const char* cutkit_last_error(void);
CUTKIT_API const char* cutkit_version(void);

/* Text edge-list or JSON. A JSON "parts" array is kept with the graph. */
CUTKIT_API cutkit_status cutkit_graph_parse(const char* text, cutkit_graph** out);
CUTKIT_API cutkit_status cutkit_graph_load(const char* path, cutkit_graph** out);
CUTKIT_API void cutkit_graph_free(cutkit_graph* g);
CUTKIT_API size_t cutkit_graph_node_count(const cutkit_graph* g);
CUTKIT_API int cutkit_graph_is_directed(const cutkit_graph* g);

/* Strings returned through char** are owned by the caller; release with cutkit_string_free. */
CUTKIT_API cutkit_status cutkit_graph_emit(const cutkit_graph* g, int as_json, char** out);
CUTKIT_API void cutkit_string_free(char* s);

/* options_json may be NULL. Reports are JSON objects. */
CUTKIT_API cutkit_status cutkit_solve(const cutkit_graph* g, const char* problem, const char* options_json,
                                      char** report);
CUTKIT_API cutkit_status cutkit_oracle(const cutkit_graph* g, const char* problem, const char* options_json,
                                       char** report);
/* what: "gadget" (g required), "dab", "skeleton"; g may be NULL otherwise. */
CUTKIT_API cutkit_status cutkit_verify(const cutkit_graph* g, const char* what, const char* options_json,
                                       char** report);
CUTKIT_API cutkit_status cutkit_generate(const char* family, const char* options_json, cutkit_graph** out);
/* kind: "3cut", "bicut" or "s-star". */
CUTKIT_API cutkit_status cutkit_reduce(const cutkit_graph* g, const char* kind, const char* options_json,
                                       cutkit_graph** out);
CUTKIT_API cutkit_status cutkit_experiment(const char* suite, const char* options_json, char** csv);

#ifdef __cplusplus
}
#endif

#endif
