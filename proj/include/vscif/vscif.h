/*
 * C interface to the vscif solver library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a vscif_status; on
 * failure a description is available from vscif_last_error() on the calling
 * thread until the next failing call on that thread. Strings handed out by
 * the library are released with vscif_string_free.
 */
#ifndef VSCIF_VSCIF_H
#define VSCIF_VSCIF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VSCIF_BUILDING_LIBRARY)
#    define VSCIF_API __declspec(dllexport)
#  else
#    define VSCIF_API __declspec(dllimport)
#  endif
#else
#  define VSCIF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vscif_status {
  VSCIF_OK = 0,
  VSCIF_E_INVALID_ARGUMENT = 1, /* null pointer or unknown enum value */
  VSCIF_E_PARSE = 2,
  VSCIF_E_STRUCTURAL = 3,
  VSCIF_E_INFEASIBLE = 4,
  VSCIF_E_PRECONDITION = 5,
  VSCIF_E_CONFIG = 6,
  VSCIF_E_IO = 7,
  VSCIF_E_BUDGET_EXCEEDED = 8,
  VSCIF_E_LIMITS_EXCEEDED = 9,
  VSCIF_E_INTERNAL = 10
} vscif_status;

typedef enum vscif_algorithm {
  VSCIF_ALGO_CIFFD = 0,
  VSCIF_ALGO_CFFF = 1,
  VSCIF_ALGO_CNFL = 2,
  VSCIF_ALGO_CDNFL = 3
} vscif_algorithm;

typedef enum vscif_cost_model {
  VSCIF_COST_LINEAR = 0,
  VSCIF_COST_MONOTONE = 1
} vscif_cost_model;

typedef enum vscif_gen_mode {
  VSCIF_MODE_KNOWN_OPTIMUM = 0,
  VSCIF_MODE_FREE = 1
} vscif_gen_mode;

typedef enum vscif_objective {
  VSCIF_OBJECTIVE_COST = 0,
  VSCIF_OBJECTIVE_BINS = 1
} vscif_objective;

/* Matches the violation categories reported by vscif_verify, in check order. */
typedef enum vscif_violation {
  VSCIF_VIOLATION_NONE = 0,
  VSCIF_VIOLATION_INVALID_CLASS = 1,
  VSCIF_VIOLATION_CAPACITY_OVERFLOW = 2,
  VSCIF_VIOLATION_MASS_MISMATCH = 3,
  VSCIF_VIOLATION_CUT_LIMIT_EXCEEDED = 4,
  VSCIF_VIOLATION_UNKNOWN_ITEM = 5,
  VSCIF_VIOLATION_EMPTY_BIN = 6
} vscif_violation;

typedef struct vscif_instance vscif_instance;
typedef struct vscif_packing vscif_packing;
typedef struct vscif_report vscif_report;

typedef struct vscif_gen_config {
  uint64_t seed;
  int32_t m;
  int64_t b_max;
  int32_t n_initial;
  int64_t item_low;
  int64_t item_high;
  int32_t cut_limit;
  vscif_cost_model cost_model;
  vscif_gen_mode mode;
} vscif_gen_config;

typedef struct vscif_exact_limits {
  int32_t max_items;
  int64_t max_size;
  int32_t max_classes;
  int32_t max_cuts;
  uint64_t node_budget;
} vscif_exact_limits;

typedef struct vscif_verdict {
  int valid; /* 1 when the packing satisfies every constraint */
  int64_t cost;
  vscif_violation violation;
  char message[256];
} vscif_verdict;

/* Errors and strings */
VSCIF_API const char* vscif_last_error(void);
VSCIF_API const char* vscif_status_name(vscif_status status);
VSCIF_API const char* vscif_violation_name(vscif_violation violation);
VSCIF_API void vscif_string_free(char* text);
VSCIF_API const char* vscif_version(void);

/* Defaults: generator with m=3, b_max=100, 200 items in [1,99], D=1). */
VSCIF_API void vscif_gen_config_default(vscif_gen_config* config);
VSCIF_API void vscif_exact_limits_default(vscif_exact_limits* limits);

/* Instances */
VSCIF_API vscif_status vscif_instance_from_json(const char* json, vscif_instance** out);
VSCIF_API vscif_status vscif_instance_load(const char* path, vscif_instance** out);
VSCIF_API vscif_status vscif_instance_to_json(const vscif_instance* instance, char** out);
VSCIF_API vscif_status vscif_instance_item_mass(const vscif_instance* instance, int64_t* out);
VSCIF_API vscif_status vscif_instance_item_count(const vscif_instance* instance, size_t* out);
VSCIF_API vscif_status vscif_instance_max_capacity(const vscif_instance* instance, int64_t* out);
/* *has_value is set to 0 when the instance carries no known optimum. */
VSCIF_API vscif_status vscif_instance_known_optimum(const vscif_instance* instance,
                                                    int* has_value, int64_t* out);
VSCIF_API void vscif_instance_free(vscif_instance* instance);

/* Generation. vscif_generate_file_text yields the instance JSON preceded by a
 * one-line provenance comment. */
VSCIF_API vscif_status vscif_generate(const vscif_gen_config* config, vscif_instance** out);
VSCIF_API vscif_status vscif_generate_file_text(const vscif_gen_config* config, char** out);

/* Packings */
VSCIF_API vscif_status vscif_packing_from_json(const char* json, vscif_packing** out);
VSCIF_API vscif_status vscif_packing_load(const char* path, vscif_packing** out);
VSCIF_API vscif_status vscif_packing_to_json(const vscif_packing* packing, char** out);
VSCIF_API vscif_status vscif_packing_bin_count(const vscif_packing* packing, size_t* out);
VSCIF_API void vscif_packing_free(vscif_packing* packing);

/* Solving. fill_factor is a decimal string in [0.5, 1] or NULL for 0.5; it is
 * ignored by every algorithm except CFFf. */
VSCIF_API vscif_status vscif_solve(const vscif_instance* instance, vscif_algorithm algorithm,
                                   const char* fill_factor, vscif_packing** packing,
                                   int64_t* cost);
VSCIF_API vscif_status vscif_total_cost(const vscif_packing* packing,
                                        const vscif_instance* instance, int64_t* out);
VSCIF_API vscif_status vscif_verify(const vscif_instance* instance,
                                    const vscif_packing* packing, vscif_verdict* out);

/* Exact search. limits may be NULL for defaults. packing may be NULL. Returns
 * VSCIF_E_BUDGET_EXCEEDED or VSCIF_E_LIMITS_EXCEEDED instead of a guess. */
VSCIF_API vscif_status vscif_exact(const vscif_instance* instance,
                                   const vscif_exact_limits* limits,
                                   vscif_objective objective, int64_t* value,
                                   vscif_packing** packing);

/* Benchmarks */
VSCIF_API vscif_status vscif_bench_run(const char* spec_json, vscif_report** out);
VSCIF_API vscif_status vscif_report_row_count(const vscif_report* report, size_t* out);
VSCIF_API vscif_status vscif_report_write_csv(const vscif_report* report, const char* path);
VSCIF_API vscif_status vscif_report_csv_text(const vscif_report* report, char** out);
VSCIF_API vscif_status vscif_report_write_chart(const vscif_report* report, const char* path);
VSCIF_API void vscif_report_free(vscif_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VSCIF_VSCIF_H */
