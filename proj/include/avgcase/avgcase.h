/*
 * avgcase C API.
 *
 * Every function returning avgcase_status reports failure through the code and
 * leaves a thread-local message readable with avgcase_last_error(). Objects are
 * opaque handles owned by the caller and released with the matching
 * *_destroy function; destroying NULL is a no-op. Output pointers are only
 * written on success, except avgcase_experiment_run which also fills its
 * output on AVGCASE_E_PROPERTY_VIOLATION.
 */
#ifndef AVGCASE_AVGCASE_H
#define AVGCASE_AVGCASE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(AVGCASE_BUILDING_LIBRARY)
#    define AVGCASE_API __declspec(dllexport)
#  else
#    define AVGCASE_API __declspec(dllimport)
#  endif
#else
#  define AVGCASE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum avgcase_status {
  AVGCASE_OK = 0,
  AVGCASE_E_INVALID_ARGUMENT = 1, /* bad input, unknown parameter, precondition violated */
  AVGCASE_E_OUT_OF_RANGE = 2,     /* index or size beyond a documented limit */
  AVGCASE_E_STATE = 3,            /* operation not valid in the object's state (full table, duplicate key) */
  AVGCASE_E_IO = 4,
  AVGCASE_E_PROPERTY_VIOLATION = 5, /* an experiment's runtime property check failed */
  AVGCASE_E_INTERNAL = 6
} avgcase_status;

AVGCASE_API const char* avgcase_last_error(void);
AVGCASE_API const char* avgcase_version(void);

/* ---- randomness ------------------------------------------------------- */

typedef struct avgcase_rng avgcase_rng;

/* Philox4x32-10 stream `stream` of master seed `seed`. */
AVGCASE_API avgcase_status avgcase_rng_create(uint64_t seed, uint64_t stream, avgcase_rng** out);
AVGCASE_API void avgcase_rng_destroy(avgcase_rng* rng);
AVGCASE_API uint64_t avgcase_rng_next_u64(avgcase_rng* rng);
AVGCASE_API double avgcase_rng_uniform(avgcase_rng* rng);

/* ---- discrete distributions and optimal stopping ---------------------- */

typedef struct avgcase_dist avgcase_dist;

typedef enum avgcase_accept_mode {
  AVGCASE_ACCEPT_AT_LEAST = 0,
  AVGCASE_ACCEPT_STRICTLY_GREATER = 1
} avgcase_accept_mode;

/* values strictly ascending, probs in (0,1] summing to 1 within 1e-12. */
AVGCASE_API avgcase_status avgcase_dist_create(const double* values, const double* probs, size_t count,
                                               avgcase_dist** out);
AVGCASE_API void avgcase_dist_destroy(avgcase_dist* dist);
AVGCASE_API avgcase_status avgcase_dist_sample(const avgcase_dist* dist, avgcase_rng* rng, double* out);
AVGCASE_API avgcase_status avgcase_expected_max(const avgcase_dist* const* dists, size_t count, double* out);

/* `stages` lists the stage distributions in arrival order. thresholds_out
 * receives `count` values (may be NULL). */
AVGCASE_API avgcase_status avgcase_stopping_optimal(const avgcase_dist* const* stages, size_t count,
                                                    double* thresholds_out, double* value_out);
AVGCASE_API avgcase_status avgcase_stopping_median_threshold(const avgcase_dist* const* stages, size_t count,
                                                             double* threshold_out,
                                                             avgcase_accept_mode* mode_out);
AVGCASE_API avgcase_status avgcase_stopping_threshold_value(const avgcase_dist* const* stages, size_t count,
                                                            double threshold, avgcase_accept_mode mode,
                                                            double* out);
AVGCASE_API avgcase_status avgcase_stopping_policy_value(const avgcase_dist* const* stages, size_t count,
                                                         const double* thresholds,
                                                         const avgcase_accept_mode* modes, double* out);

/* ---- sorting ----------------------------------------------------------- */

/* sorted_out may alias nothing in `input`; it receives `count` values. */
AVGCASE_API avgcase_status avgcase_quicksort_first_pivot(const int64_t* input, size_t count,
                                                         int64_t* sorted_out, uint64_t* comparisons_out);
AVGCASE_API double avgcase_expected_comparisons(size_t n);

/* ---- linear probing ---------------------------------------------------- */

typedef struct avgcase_probe_table avgcase_probe_table;

AVGCASE_API avgcase_status avgcase_probe_table_create(size_t capacity, avgcase_probe_table** out);
AVGCASE_API void avgcase_probe_table_destroy(avgcase_probe_table* table);
/* hash is a slot index in [0, capacity). */
AVGCASE_API avgcase_status avgcase_probe_table_insert(avgcase_probe_table* table, uint64_t key, size_t hash,
                                                      size_t* probes_out);
AVGCASE_API avgcase_status avgcase_probe_table_lookup(const avgcase_probe_table* table, uint64_t key,
                                                      size_t hash, int* found_out, size_t* probes_out);
AVGCASE_API size_t avgcase_probe_table_size(const avgcase_probe_table* table);
AVGCASE_API double avgcase_probe_table_load(const avgcase_probe_table* table);
AVGCASE_API avgcase_status avgcase_probe_table_expected_insertion_probes(const avgcase_probe_table* table,
                                                                         double* out);
AVGCASE_API avgcase_status avgcase_geometric_reference(double alpha, double* out);

/* ---- bin packing ------------------------------------------------------- */

typedef struct avgcase_packing avgcase_packing;

AVGCASE_API avgcase_status avgcase_binpack_ffd(const double* sizes, size_t count, avgcase_packing** out);
AVGCASE_API avgcase_status avgcase_binpack_truncate_match(const double* sizes, size_t count,
                                                          avgcase_packing** out);
AVGCASE_API void avgcase_packing_destroy(avgcase_packing* packing);
AVGCASE_API size_t avgcase_packing_bin_count(const avgcase_packing* packing);
/* items_out points into the packing and stays valid until it is destroyed. */
AVGCASE_API avgcase_status avgcase_packing_bin(const avgcase_packing* packing, size_t bin,
                                               const size_t** items_out, size_t* count_out);
AVGCASE_API avgcase_status avgcase_packing_validate(const double* sizes, size_t count,
                                                    const avgcase_packing* packing, int* valid_out);
AVGCASE_API avgcase_status avgcase_binpack_lower_bound(const double* sizes, size_t count, size_t* out);

/* ---- convex hull ------------------------------------------------------- */

typedef struct avgcase_point {
  double x;
  double y;
} avgcase_point;

typedef struct avgcase_hull avgcase_hull;

AVGCASE_API avgcase_status avgcase_hull_divide_conquer(const avgcase_point* points, size_t count,
                                                       avgcase_hull** out);
AVGCASE_API avgcase_status avgcase_hull_bruteforce(const avgcase_point* points, size_t count,
                                                   avgcase_hull** out);
AVGCASE_API avgcase_status avgcase_hull_merge(const avgcase_hull* first, const avgcase_hull* second,
                                              avgcase_hull** out);
AVGCASE_API void avgcase_hull_destroy(avgcase_hull* hull);
AVGCASE_API size_t avgcase_hull_size(const avgcase_hull* hull);
/* Counterclockwise from the lexicographically smallest vertex. */
AVGCASE_API const avgcase_point* avgcase_hull_vertices(const avgcase_hull* hull);

/* ---- Euclidean TSP ----------------------------------------------------- */

/* order_out receives `count` point indices. */
AVGCASE_API avgcase_status avgcase_tsp_held_karp(const avgcase_point* points, size_t count, size_t* order_out,
                                                 double* length_out);
AVGCASE_API avgcase_status avgcase_tsp_stitch(const avgcase_point* points, size_t count, size_t* order_out,
                                              double* length_out);
AVGCASE_API avgcase_status avgcase_tour_length(const avgcase_point* points, size_t count, const size_t* order,
                                               double* out);

/* ---- random graphs ----------------------------------------------------- */

typedef struct avgcase_graph avgcase_graph;

AVGCASE_API avgcase_status avgcase_graph_gen_er(size_t n, double p, avgcase_rng* rng, avgcase_graph** out);
AVGCASE_API avgcase_status avgcase_graph_gen_planted_bisection(size_t n, double p, double q, avgcase_rng* rng,
                                                               avgcase_graph** out);
AVGCASE_API avgcase_status avgcase_graph_gen_planted_clique(size_t n, size_t k, avgcase_rng* rng,
                                                            avgcase_graph** out);
AVGCASE_API avgcase_status avgcase_graph_read_edge_list(const char* path, avgcase_graph** out);
AVGCASE_API avgcase_status avgcase_graph_write_edge_list(const avgcase_graph* graph, const char* path);
AVGCASE_API void avgcase_graph_destroy(avgcase_graph* graph);
AVGCASE_API size_t avgcase_graph_vertex_count(const avgcase_graph* graph);
AVGCASE_API size_t avgcase_graph_edge_count(const avgcase_graph* graph);
AVGCASE_API avgcase_status avgcase_graph_has_edge(const avgcase_graph* graph, size_t u, size_t v, int* out);
AVGCASE_API avgcase_status avgcase_graph_degree(const avgcase_graph* graph, size_t v, size_t* out);
/* Planted clique members (ascending); AVGCASE_E_STATE when none was planted. */
AVGCASE_API avgcase_status avgcase_graph_planted_clique(const avgcase_graph* graph, const size_t** members_out,
                                                        size_t* count_out);
/* Planted sides, n/2 ascending ids each, copied into side_a/side_b. */
AVGCASE_API avgcase_status avgcase_graph_planted_bisection(const avgcase_graph* graph, size_t* side_a,
                                                           size_t* side_b);

/* out receives k ascending vertex ids. */
AVGCASE_API avgcase_status avgcase_top_k_degrees(const avgcase_graph* graph, size_t k, size_t* out);
/* out must hold vertex_count ids; count_out receives the clique size. */
AVGCASE_API avgcase_status avgcase_greedy_clique(const avgcase_graph* graph, avgcase_rng* rng, size_t* out,
                                                 size_t* count_out);
/* side_a and side_b each receive n/2 ascending ids. */
AVGCASE_API avgcase_status avgcase_common_neighbor_bisection(const avgcase_graph* graph, size_t* side_a,
                                                             size_t* side_b);
AVGCASE_API avgcase_status avgcase_bisection_cut(const avgcase_graph* graph, const size_t* side_a,
                                                 const size_t* side_b, size_t half, size_t* out);
AVGCASE_API avgcase_status avgcase_expected_k_cliques(size_t n, size_t k, double* out);

/* ---- experiments and records ------------------------------------------ */

typedef struct avgcase_params avgcase_params;
typedef struct avgcase_records avgcase_records;

typedef enum avgcase_format { AVGCASE_FORMAT_CSV = 0, AVGCASE_FORMAT_JSON = 1 } avgcase_format;

AVGCASE_API size_t avgcase_experiment_count(void);
AVGCASE_API const char* avgcase_experiment_name(size_t index);
AVGCASE_API const char* avgcase_experiment_summary(size_t index);
AVGCASE_API size_t avgcase_experiment_param_count(size_t index);
/* name/default/help of parameter `param` of experiment `index`; NULL when out of range. */
AVGCASE_API const char* avgcase_experiment_param_name(size_t index, size_t param);
AVGCASE_API const char* avgcase_experiment_param_default(size_t index, size_t param);
AVGCASE_API const char* avgcase_experiment_param_help(size_t index, size_t param);

AVGCASE_API avgcase_status avgcase_params_create(avgcase_params** out);
AVGCASE_API void avgcase_params_destroy(avgcase_params* params);
/* Later values replace earlier ones with the same name. */
AVGCASE_API avgcase_status avgcase_params_set(avgcase_params* params, const char* name, const char* value);

/* Runs experiment `name` with `trials` trials seeded from `seed`. Returns
 * AVGCASE_E_PROPERTY_VIOLATION, with *out still set, when a runtime property
 * check fails. params may be NULL. */
AVGCASE_API avgcase_status avgcase_experiment_run(const char* name, const avgcase_params* params, uint64_t seed,
                                                  uint32_t trials, avgcase_records** out);

/* Checks the experiment name, parameter names and values without running
 * anything; AVGCASE_E_INVALID_ARGUMENT with a message naming the flag. */
AVGCASE_API avgcase_status avgcase_experiment_validate(const char* name, const avgcase_params* params,
                                                       uint32_t trials);

AVGCASE_API void avgcase_records_destroy(avgcase_records* records);
AVGCASE_API size_t avgcase_records_count(const avgcase_records* records);
AVGCASE_API avgcase_status avgcase_records_stat(const avgcase_records* records, size_t row, const char* name,
                                                double* out);
AVGCASE_API avgcase_status avgcase_records_param(const avgcase_records* records, size_t row, const char* name,
                                                 const char** out);
AVGCASE_API size_t avgcase_records_violation_count(const avgcase_records* records);
AVGCASE_API const char* avgcase_records_violation(const avgcase_records* records, size_t index);
/* Serialized text (NUL-terminated) released with avgcase_string_free. */
AVGCASE_API avgcase_status avgcase_records_serialize(const avgcase_records* records, avgcase_format format,
                                                     char** text_out, size_t* length_out);
AVGCASE_API void avgcase_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* AVGCASE_AVGCASE_H */
