/* C interface to the adjc engine. All handles are opaque; every function
 * returns an adjc_status and reports details through adjc_last_error(). */
#ifndef ADJC_ADJC_H
#define ADJC_ADJC_H

#include <stddef.h>
#include <stdint.h>

#if defined(ADJC_BUILDING_LIBRARY)
#define ADJC_API __attribute__((visibility("default")))
#else
#define ADJC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adjc_status {
  ADJC_OK = 0,
  ADJC_ERR_NULL_ARGUMENT = 1,
  ADJC_ERR_INVALID_INPUT = 2, /* unknown group, suite, bad rank */
  ADJC_ERR_STRUCTURAL = 3,
  ADJC_ERR_NON_GENERIC = 4,
  ADJC_ERR_POLE = 5,
  ADJC_ERR_CONSISTENCY = 6,
  ADJC_ERR_BUFFER_TOO_SMALL = 7,
  ADJC_ERR_INTERNAL = 8
} adjc_status;

typedef enum adjc_format { ADJC_FORMAT_JSON = 0, ADJC_FORMAT_MARKDOWN = 1 } adjc_format;

typedef struct adjc_group adjc_group;
typedef struct adjc_report adjc_report;

ADJC_API const char* adjc_version(void);
ADJC_API const char* adjc_status_name(adjc_status status);
/* Message of the last failing call on this thread; empty after success. */
ADJC_API const char* adjc_last_error(void);
ADJC_API void adjc_string_free(char* s);

/* Root systems. Any simple type is accepted here. */
ADJC_API adjc_status adjc_group_create(char letter, int rank, adjc_group** out);
ADJC_API adjc_status adjc_group_parse(const char* name, adjc_group** out);
ADJC_API void adjc_group_destroy(adjc_group* group);

ADJC_API adjc_status adjc_group_name(const adjc_group* group, char** out);
ADJC_API adjc_status adjc_group_rank(const adjc_group* group, int* out);
ADJC_API adjc_status adjc_group_root_count(const adjc_group* group, size_t* out);
ADJC_API adjc_status adjc_group_long_root_count(const adjc_group* group, size_t* out);
ADJC_API adjc_status adjc_group_lie_dimension(const adjc_group* group, int* out);
ADJC_API adjc_status adjc_group_adjoint_dimension(const adjc_group* group, int* out);
ADJC_API adjc_status adjc_group_fixed_point_count(const adjc_group* group, size_t* out);
/* Betti numbers b_0, b_2, ... for the first generic covector of the seed.
 * Writes the required length to *count; fails with BUFFER_TOO_SMALL when
 * capacity is short. */
ADJC_API adjc_status adjc_group_betti_numbers(const adjc_group* group, uint64_t seed, int* buffer, size_t capacity,
                                              size_t* count);
/* Compares localization and adjoint character at `points` seeded points;
 * *all_equal is 1 when they agree everywhere. */
ADJC_API adjc_status adjc_group_character_check(const adjc_group* group, uint64_t seed, size_t points,
                                                int* all_equal);

/* Comma-separated lists. */
ADJC_API adjc_status adjc_default_groups(char** out);
ADJC_API adjc_status adjc_suite_names(char** out);

/* Runs the verification suites. Empty group list: defaults; empty suite
 * list: all. Unknown names give ADJC_ERR_INVALID_INPUT. */
ADJC_API adjc_status adjc_run_suite(const char* const* groups, size_t group_count, const char* const* suites,
                                    size_t suite_count, uint64_t seed, int max_rank, adjc_report** out);
ADJC_API adjc_status adjc_report_render(const adjc_report* report, adjc_format format, char** out);
ADJC_API adjc_status adjc_report_result_count(const adjc_report* report, size_t* out);
ADJC_API adjc_status adjc_report_failures(const adjc_report* report, size_t* out);
ADJC_API void adjc_report_destroy(adjc_report* report);

#ifdef __cplusplus
}
#endif

#endif
