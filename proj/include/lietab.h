/* C interface to the lietab engine.
 *
 * Every entry point returns a lietab_status; on failure the handle/output
 * parameters are untouched and lietab_last_error() describes the problem
 * (thread-local).  Strings returned through char** are heap-allocated and
 * must be released with lietab_string_free().
 */

#ifndef LIETAB_H
#define LIETAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lietab_model lietab_model;
typedef struct lietab_artifacts lietab_artifacts;

typedef enum {
  LIETAB_OK = 0,
  LIETAB_ERR_VALIDATION = 1, /* inconsistent or cross-referentially broken data */
  LIETAB_ERR_PARSE = 2,      /* unreadable JSON or expression syntax */
  LIETAB_ERR_MATH = 3,       /* no exact solution: singular system, non-integer
                                multiplicity, guard violation, ... */
  LIETAB_ERR_IO = 4,         /* unreadable or unwritable file */
  LIETAB_ERR_USAGE = 5       /* null handle or invalid argument combination */
} lietab_status;

const char* lietab_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* lietab_last_error(void);

void lietab_string_free(char* s);

/* ---- models ---------------------------------------------------------- */

lietab_status lietab_model_load(const char* path, lietab_model** out);
lietab_status lietab_model_load_string(const char* text, lietab_model** out);
void lietab_model_free(lietab_model* m);

/* Canonical rendering; format is "json" or "text". */
lietab_status lietab_export(const lietab_model* m, const char* format,
                            char** out);

/* Runs the consistency sweep.  qs/nq add exact specializations at those
 * prime powers (may be NULL/0).  *ok is set to 1 when every check passed;
 * *report receives the human-readable check list. */
lietab_status lietab_verify(const lietab_model* m, const long long* qs,
                            size_t nq, int* ok, char** report);

/* Inner product of two named class functions; the canonical expression is
 * returned through *value.  support_unipotent != 0 restricts the sum to the
 * unipotent classes; *partial is set to 1 unless the sum ranged over the
 * full class list of a complete table. */
lietab_status lietab_inner(const lietab_model* m, const char* left,
                           const char* right, int support_unipotent,
                           int* partial, char** value);

/* ---- pipeline runs --------------------------------------------------- */

lietab_status lietab_run(const lietab_model* m, const char* plan_path,
                         lietab_artifacts** out);
lietab_status lietab_run_string(const lietab_model* m, const char* plan_text,
                                lietab_artifacts** out);
void lietab_artifacts_free(lietab_artifacts* a);

/* Ingestible JSON of everything the run produced. */
lietab_status lietab_artifacts_to_json(const lietab_artifacts* a, char** out);

#ifdef __cplusplus
}
#endif

#endif
