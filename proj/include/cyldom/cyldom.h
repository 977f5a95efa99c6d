/* C interface to the cylinder domination bound library. All functions return a
 * cyldom_status; on failure cyldom_last_error() describes the problem (per
 * thread, valid until the next failing call on that thread). Strings returned
 * through char** are owned by the caller and released with cyldom_string_free. */
#ifndef CYLDOM_CYLDOM_H_
#define CYLDOM_CYLDOM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CYLDOM_BUILDING_LIBRARY)
#define CYLDOM_API __attribute__((visibility("default")))
#else
#define CYLDOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cyldom_status {
  CYLDOM_OK = 0,
  CYLDOM_ERR_INVALID_ARGUMENT = 1,
  CYLDOM_ERR_CAPACITY = 2,
  CYLDOM_ERR_INCOMPLETE_TABLE = 3,
  CYLDOM_ERR_INFEASIBLE = 4,
  CYLDOM_ERR_DOMAIN = 5,
  CYLDOM_ERR_NO_WITNESS = 6,
  CYLDOM_ERR_IO = 7,
  CYLDOM_ERR_FORMAT = 8,
  CYLDOM_ERR_INTERNAL = 9
} cyldom_status;

typedef enum cyldom_variant { CYLDOM_BOUNDARY = 0, CYLDOM_INTERIOR = 1 } cyldom_variant;

typedef enum cyldom_format { CYLDOM_FORMAT_JSON = 0, CYLDOM_FORMAT_CSV = 1, CYLDOM_FORMAT_MARKDOWN = 2 } cyldom_format;

typedef struct cyldom_waste_table cyldom_waste_table;
typedef struct cyldom_table_set cyldom_table_set;
typedef struct cyldom_report cyldom_report;

typedef void (*cyldom_progress_fn)(size_t done, size_t total, void* user);
typedef void (*cyldom_log_fn)(const char* line, void* user);

CYLDOM_API const char* cyldom_version(void);
CYLDOM_API const char* cyldom_last_error(void);
CYLDOM_API const char* cyldom_status_name(cyldom_status status);
CYLDOM_API void cyldom_string_free(char* s);

/* Accepts "boundary" / "interior". */
CYLDOM_API cyldom_status cyldom_parse_variant(const char* name, cyldom_variant* out);

CYLDOM_API cyldom_status cyldom_state_count(int height, uint64_t* out);
CYLDOM_API cyldom_status cyldom_transition_count(int height, cyldom_variant variant, uint64_t* out);

typedef struct cyldom_dp_config {
  int n_max;
  int p_max;
  int window;
  int threads;
} cyldom_dp_config;

CYLDOM_API void cyldom_dp_config_default(cyldom_variant variant, cyldom_dp_config* out);

/* ---- waste tables ---- */

CYLDOM_API cyldom_status cyldom_waste_table_compute(int height, cyldom_variant variant,
                                                    const cyldom_dp_config* config,
                                                    cyldom_progress_fn progress, void* user,
                                                    cyldom_waste_table** out);
CYLDOM_API cyldom_status cyldom_waste_table_load(const char* path, cyldom_waste_table** out);
CYLDOM_API cyldom_status cyldom_waste_table_save(const cyldom_waste_table* table, const char* path);
/* *out is NULL (and the call succeeds) when no cache file exists. */
CYLDOM_API cyldom_status cyldom_waste_table_load_cached(const char* dir, cyldom_variant variant,
                                                        int height, int n_max,
                                                        cyldom_waste_table** out);
/* path_out may be NULL. */
CYLDOM_API cyldom_status cyldom_waste_table_store_cached(const char* dir,
                                                         const cyldom_waste_table* table,
                                                         char** path_out);
CYLDOM_API cyldom_status cyldom_cache_file_name(cyldom_variant variant, int height, int n_max,
                                                char** out);
CYLDOM_API void cyldom_waste_table_free(cyldom_waste_table* table);

typedef struct cyldom_table_info {
  int height;
  cyldom_variant variant;
  int n_max;
  uint64_t seeds_total;
  uint64_t seeds_certified;
  int has_global;
  int global_first;
  int global_period;
  int64_t global_increment;
  size_t residue_count; /* 0 when no residue constants */
} cyldom_table_info;

CYLDOM_API cyldom_status cyldom_waste_table_info(const cyldom_waste_table* table, cyldom_table_info* out);
/* Copies min(capacity, residue_count) values. */
CYLDOM_API cyldom_status cyldom_waste_table_residues(const cyldom_waste_table* table, int64_t* out,
                                                     size_t capacity);
/* *out = -1 when no almost-domination exists for n columns. */
CYLDOM_API cyldom_status cyldom_waste_table_query(const cyldom_waste_table* table, int64_t n,
                                                  int64_t* out);
CYLDOM_API cyldom_status cyldom_waste_table_to_json(const cyldom_waste_table* table, char** out);

/* ---- bounds ---- */

CYLDOM_API cyldom_status cyldom_table_set_new(cyldom_table_set** out);
/* The set keeps its own reference; the caller may free table afterwards. */
CYLDOM_API cyldom_status cyldom_table_set_add(cyldom_table_set* set, const cyldom_waste_table* table);
CYLDOM_API void cyldom_table_set_free(cyldom_table_set* set);

typedef struct cyldom_report_options {
  int with_exact;
  int allow_padding;
} cyldom_report_options;

typedef struct cyldom_report_values {
  int64_t n;
  int64_t m;
  int64_t total_waste;
  int64_t lower;
  int has_paper_lower;
  int64_t paper_lower_num;
  int64_t paper_lower_den;
  int64_t upper_ref_num;
  int64_t upper_ref_den;
  int has_exact;
  int64_t exact;
  int has_partition;
  int is_exact; /* status "exact" */
} cyldom_report_values;

CYLDOM_API void cyldom_report_options_default(cyldom_report_options* out);
/* set may be NULL (no strip tables, trivial lower bound). */
CYLDOM_API cyldom_status cyldom_report_make(int64_t n, int64_t m, const cyldom_table_set* set,
                                            const cyldom_report_options* options,
                                            cyldom_report** out);
CYLDOM_API cyldom_status cyldom_report_values_get(const cyldom_report* report, cyldom_report_values* out);
CYLDOM_API cyldom_status cyldom_report_partition(const cyldom_report* report, char** out);
/* One JSON object, CSV row or markdown row, without trailing newline. */
CYLDOM_API cyldom_status cyldom_report_format(const cyldom_report* report, cyldom_format format,
                                              char** out);
/* Header line(s) for CSV / markdown; empty string for JSON. */
CYLDOM_API cyldom_status cyldom_report_header(cyldom_format format, char** out);
CYLDOM_API void cyldom_report_free(cyldom_report* report);

CYLDOM_API cyldom_status cyldom_paper_lower_bound(int64_t n, int64_t m, int64_t* num, int64_t* den);
CYLDOM_API cyldom_status cyldom_upper_bound_reference(int64_t n, int64_t m, int64_t* num, int64_t* den);

/* ---- oracle ---- */

CYLDOM_API cyldom_status cyldom_exact_domination_number(int n, int m, int* gamma);
CYLDOM_API cyldom_status cyldom_brute_min_waste(int height, int n, cyldom_variant variant, int64_t* out);

/* ---- verification ---- */

/* suite: "oracle", "paper" or "all". cache_dir may be NULL or empty. *passed is
 * 1 iff every check passed; report_json (may be NULL) receives the full report. */
CYLDOM_API cyldom_status cyldom_verify(const char* suite, int threads, const char* cache_dir,
                                       cyldom_log_fn log, void* user, int* passed,
                                       char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CYLDOM_CYLDOM_H_ */
