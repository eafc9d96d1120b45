/*
 * libstab C interface.
 *
 * All results are returned as JSON text in buffers owned by the caller and
 * released with stab_string_free(). Rationals are passed as strings in the
 * form "p" or "p/q". Every call returns a stab_status; on failure the
 * message for the calling thread is available from stab_last_error().
 */
#ifndef STAB_STAB_H
#define STAB_STAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(STAB_BUILDING_LIBRARY)
#  define STAB_API __attribute__((visibility("default")))
#else
#  define STAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stab_status {
  STAB_OK = 0,
  STAB_ERR_INVALID_ARGUMENT = 1,
  STAB_ERR_PARSE = 2,
  STAB_ERR_SCHEMA = 3,
  STAB_ERR_INDEX_OUT_OF_RANGE = 4,
  STAB_ERR_SIZE_MISMATCH = 5,
  STAB_ERR_TOO_LARGE = 6,
  STAB_ERR_DEGENERATE = 7,
  STAB_ERR_FRAME_DEGENERATE = 8,
  STAB_ERR_ROW_ELIMINATION = 9,
  STAB_ERR_SINGULAR_POINT = 10,
  STAB_ERR_NOT_ON_HYPERSURFACE = 11,
  STAB_ERR_PENCIL_SEARCH_FAILED = 12,
  STAB_ERR_INTERNAL = 99
} stab_status;

/* Opaque, immutable point configuration. */
typedef struct stab_config stab_config;

STAB_API const char* stab_version(void);
STAB_API const char* stab_status_name(stab_status status);
/* Message of the last failed call on this thread; "" if none. */
STAB_API const char* stab_last_error(void);
STAB_API void stab_string_free(char* s);

/* {"ambient_rank": r, "points": [["1","0","0"], ...]} */
STAB_API stab_status stab_config_parse(const char* json, stab_config** out);
STAB_API stab_status stab_config_to_json(const stab_config* config, char** out_json);
STAB_API size_t stab_config_size(const stab_config* config);
STAB_API size_t stab_config_ambient_rank(const stab_config* config);
STAB_API void stab_config_free(stab_config* config);

/* {"class": ..., "witness": {...}|null, "margin": "p/q"}.
 * use_oracle != 0 selects exhaustive enumeration, capped at oracle_cap points. */
STAB_API stab_status stab_git_classify(const stab_config* config, const char* g, int use_oracle, size_t oracle_cap,
                                       char** out_json);

/* {"values": ["1", "2", ...]} */
STAB_API stab_status stab_critical_values(int64_t r, int64_t d, int64_t k, char** out_json);

STAB_API stab_status stab_alpha_check(const stab_config* config, const char* g, const char* alpha, char** out_json);

/* *agree is set to 1 when GIT and alpha verdicts coincide. */
STAB_API stab_status stab_equivalence(const stab_config* config, int64_t g, char** out_json, int* agree);

/* lambdas: comma separated rationals, or NULL for 1..g+1. */
STAB_API stab_status stab_destable_example(int64_t genus, const char* lambdas, stab_config** out);

/* has_seed != 0 recombines the kernel basis with a seeded random matrix. */
STAB_API stab_status stab_gale(const stab_config* config, int has_seed, uint64_t seed, char** out_json);

/* which: "segre", "igusa" or "duality". *passed is 1 when every check held. */
STAB_API stab_status stab_hypersurface_verify(const char* which, uint64_t samples, uint64_t seed, char** out_json,
                                              int* passed);

STAB_API stab_status stab_incidence(char** out_json);

STAB_API stab_status stab_verify_all(uint64_t samples, uint64_t seed, char** out_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* STAB_STAB_H */
