/* C interface to the compact Clifford-Klein form obstruction checker.
 *
 * All functions that can fail return a ckforms_status; on failure a
 * human-readable message is available from ckforms_last_error() until the
 * next failing call on the same thread. Strings returned through char**
 * parameters are heap-allocated and must be released with
 * ckforms_string_free().
 */
#ifndef CKFORMS_H
#define CKFORMS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CKFORMS_API __declspec(dllexport)
#else
#define CKFORMS_API __attribute__((visibility("default")))
#endif

typedef enum ckforms_status {
  CKFORMS_OK = 0,
  CKFORMS_ERR_INVALID_INPUT = 1, /* bad pair data, unknown id, malformed JSON */
  CKFORMS_ERR_INTERNAL = 2       /* a broken internal invariant; a bug */
} ckforms_status;

/* An immutable reductive pair: compact data for the two groups, the torus
 * embeddings, and the rank bookkeeping. Opaque. */
typedef struct ckforms_pair ckforms_pair;

typedef struct ckforms_check_options {
  int max_degree;   /* search bound on polynomial degree; <= 0 means 12 */
  int force_search; /* nonzero: search even when the precheck says inapplicable */
  int with_timing;  /* nonzero: include wall-clock timing in the report */
} ckforms_check_options;

CKFORMS_API const char* ckforms_version(void);

/* Message of the most recent failure on the calling thread, or "". */
CKFORMS_API const char* ckforms_last_error(void);

/* Constructors. Catalog ids accept aliases ("gl4r-gl2c"). The family
 * constructor takes the parameter tuple of a known family, e.g.
 * ("sl-pq-so-pq", {1,3}). */
CKFORMS_API ckforms_status ckforms_pair_from_catalog(const char* id_or_alias,
                                                     ckforms_pair** out);
CKFORMS_API ckforms_status ckforms_pair_from_json(const char* json_text,
                                                  ckforms_pair** out);
CKFORMS_API ckforms_status ckforms_pair_from_family(const char* family, const int* params,
                                                    size_t num_params, ckforms_pair** out);
CKFORMS_API void ckforms_pair_free(ckforms_pair* pair);

CKFORMS_API ckforms_status ckforms_pair_id(const ckforms_pair* pair, char** out);
CKFORMS_API ckforms_status ckforms_pair_to_json(const ckforms_pair* pair, char** out);

/* Runs the obstruction check and renders the report. format is "json" or
 * "text". Reports omit timing unless requested, so equal inputs produce
 * byte-identical output. */
CKFORMS_API ckforms_status ckforms_check(const ckforms_pair* pair,
                                         const ckforms_check_options* opts,
                                         const char* format, char** out_report);

/* Re-verifies a witness expression such as "c2@1 - c2@2" against the pair:
 * *out_valid becomes nonzero when the element restricts to zero on the K_H
 * torus and lies outside the restricted ambient ideal. A malformed or
 * unresolvable expression is an error, a failing certificate is not. */
CKFORMS_API ckforms_status ckforms_verify_witness(const ckforms_pair* pair,
                                                  const char* expression, int* out_valid);

/* The built-in example catalog and the parameterized families, as JSON. */
CKFORMS_API ckforms_status ckforms_catalog_json(char** out);
CKFORMS_API ckforms_status ckforms_families_json(char** out);

CKFORMS_API void ckforms_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CKFORMS_H */
