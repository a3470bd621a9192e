#ifndef RGAP_RGAP_H
#define RGAP_RGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RGAP_BUILDING_LIBRARY)
#    define RGAP_API __declspec(dllexport)
#  else
#    define RGAP_API __declspec(dllimport)
#  endif
#else
#  define RGAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rgap_status {
  RGAP_OK = 0,
  RGAP_INVALID_ARGUMENT = 1,
  RGAP_CONFIG = 2,
  RGAP_IO = 3,
  RGAP_DOMAIN = 4,
  RGAP_NUMERICAL = 5,
  RGAP_INTERNAL = 6
} rgap_status;

/* Opaque handles. */
typedef struct rgap_config rgap_config;
typedef struct rgap_result rgap_result;

RGAP_API const char* rgap_version(void);
RGAP_API const char* rgap_status_name(rgap_status status);

/* Message of the last failing call on this thread ("" if none). */
RGAP_API const char* rgap_last_error(void);
/* Pipeline stage of the last failure, or "" when it was not stage-scoped. */
RGAP_API const char* rgap_last_error_stage(void);

/* method: "dot-music", "scatter-dsm" or NULL to take it from the file. */
RGAP_API rgap_status rgap_config_load(const char* path, const char* method, rgap_config** out);
RGAP_API rgap_status rgap_config_parse(const char* text, const char* method, rgap_config** out);
RGAP_API void rgap_config_free(rgap_config* config);
RGAP_API rgap_status rgap_config_set_output_dir(rgap_config* config, const char* dir);
/* Valid until the config is modified or freed. */
RGAP_API const char* rgap_config_output_dir(const rgap_config* config);

RGAP_API rgap_status rgap_run(const rgap_config* config, rgap_result** out);
RGAP_API void rgap_result_free(rgap_result* result);

RGAP_API int rgap_result_grid_nodes(const rgap_result* result);
/* grid_nodes^2 values, flat index j * n + i; valid until the result is freed. */
RGAP_API const double* rgap_result_field_values(const rgap_result* result);
RGAP_API size_t rgap_result_peak_count(const rgap_result* result);
RGAP_API rgap_status rgap_result_peak(const rgap_result* result, size_t index, double* x, double* y,
                                      double* value);
/* Largest distance from a true center to its nearest peak. */
RGAP_API double rgap_result_worst_match(const rgap_result* result);
/* Estimated signal rank (MUSIC), -1 otherwise. */
RGAP_API int rgap_result_rank(const rgap_result* result);
/* Writes field.csv, peaks.json and heatmap.pgm; dir NULL uses the config's output_dir. */
RGAP_API rgap_status rgap_result_write(const rgap_result* result, const char* dir);

typedef void (*rgap_selftest_callback)(const char* name, int passed, const char* detail, void* user);
RGAP_API rgap_status rgap_selftest(rgap_selftest_callback callback, void* user, int* failures);

/* Orders 0 and 1. */
RGAP_API rgap_status rgap_bessel_j(int order, double x, double* out);
RGAP_API rgap_status rgap_bessel_y(int order, double x, double* out);
RGAP_API rgap_status rgap_hankel1(int order, double x, double* re, double* im);

#ifdef __cplusplus
}
#endif

#endif
