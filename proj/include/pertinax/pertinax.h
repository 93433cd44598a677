/* C interface to the pertinax engine. */
#ifndef PERTINAX_H
#define PERTINAX_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PERTINAX_BUILDING_LIBRARY)
#define PERTINAX_API __attribute__((visibility("default")))
#else
#define PERTINAX_API
#endif

typedef struct pertinax_session pertinax_session;

typedef enum pertinax_status {
  PERTINAX_OK = 0,
  PERTINAX_USAGE = 1,    /* bad script, bad option */
  PERTINAX_MATH = 2,     /* a task failed for mathematical reasons */
  PERTINAX_INTERNAL = 3
} pertinax_status;

PERTINAX_API const char* pertinax_version(void);

/* NULL only on allocation failure. */
PERTINAX_API pertinax_session* pertinax_session_create(void);
PERTINAX_API void pertinax_session_destroy(pertinax_session* s);

/* Parse and validate. source_name may be NULL. */
PERTINAX_API pertinax_status pertinax_load(pertinax_session* s, const char* script, const char* source_name);

/* Keys: maxdeg, threads, seed, timing. */
PERTINAX_API pertinax_status pertinax_set_option(pertinax_session* s, const char* key, long value);

/* Runs every task; the status is the worst task outcome. */
PERTINAX_API pertinax_status pertinax_run(pertinax_session* s);

/* Owned by the session, valid until the next call on it. */
PERTINAX_API const char* pertinax_report_json(pertinax_session* s);
PERTINAX_API const char* pertinax_report_text(pertinax_session* s);
PERTINAX_API const char* pertinax_last_error(const pertinax_session* s);
PERTINAX_API const char* pertinax_last_error_code(const pertinax_session* s);

#ifdef __cplusplus
}
#endif

#endif
