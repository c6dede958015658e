/* C interface to the qta solver library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions that can fail return a qta_status; QTA_OK is zero. A detail
 * message for the most recent failure on the calling thread is available
 * via qta_last_error(). City indices are 0-based.
 */
#ifndef QTA_H
#define QTA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qta_instance qta_instance;
typedef struct qta_config qta_config;
typedef struct qta_result qta_result;
typedef struct qta_baseline_result qta_baseline_result;

typedef enum qta_status {
    QTA_OK = 0,
    QTA_ERR_IO = 1,
    QTA_ERR_PARSE = 2,
    QTA_ERR_UNSUPPORTED_FORMAT = 3,
    QTA_ERR_DEGENERATE_INSTANCE = 4,
    QTA_ERR_BOUNDS = 5,
    QTA_ERR_INVALID_TOUR = 6,
    QTA_ERR_INVALID_LABELING = 7,
    QTA_ERR_UNDEFINED_METRIC = 8,
    QTA_ERR_SIZE = 9,
    QTA_ERR_SHAPE = 10,
    QTA_ERR_BUDGET_EXHAUSTED = 11,
    QTA_ERR_INFEASIBLE_SAMPLE = 12,
    QTA_ERR_NOT_CONFIGURED = 13,
    QTA_ERR_INSUFFICIENT_BUDGET = 14,
    QTA_ERR_INVALID_ARGUMENT = 15,
    QTA_ERR_INTERNAL = 16
} qta_status;

const char* qta_version(void);
const char* qta_status_name(qta_status status);
const char* qta_last_error(void);

/* ---- instances ------------------------------------------------------- */

/* mode_override: NULL for the file default, or "geo", "euc-round",
 * "euc-real". */
qta_status qta_instance_load(const char* path, const char* mode_override, qta_instance** out);
void qta_instance_free(qta_instance* inst);

int qta_instance_n_cities(const qta_instance* inst);
const char* qta_instance_name(const qta_instance* inst);
const char* qta_instance_mode(const qta_instance* inst);
/* Parser notes (ignored file sections), one per line; "" when none. */
const char* qta_instance_notes(const qta_instance* inst);
qta_status qta_instance_distance(const qta_instance* inst, int i, int j, double* out);
qta_status qta_instance_tour_cost(const qta_instance* inst, const int* tour, int len,
                                  double* out);

/* ---- solver configuration -------------------------------------------- */

qta_config* qta_config_new(void);
void qta_config_free(qta_config* config);

/* Accepted keys (same spelling as the CLI flags without the leading --):
 *   budget, max_cluster_size, sampler (exact|anneal|remote), reads, sweeps,
 *   init (random|covns), iteration_cap, merge_sweep (all|random),
 *   restart_after, population_size, generations, migration_period,
 *   baseline_restarts
 */
qta_status qta_config_set(qta_config* config, const char* key, const char* value);

/* ---- solver runs ------------------------------------------------------ */

qta_status qta_run(const qta_instance* inst, const qta_config* config,
                   unsigned long long seed, qta_result** out);
void qta_result_free(qta_result* result);

double qta_result_cost(const qta_result* result);
int qta_result_tour_length(const qta_result* result);
qta_status qta_result_tour(const qta_result* result, int* buf, int buf_len);
/* Cluster label (1-based) per city for the incumbent labeling. */
qta_status qta_result_labels(const qta_result* result, int* buf, int buf_len);
int qta_result_accesses(const qta_result* result);
int qta_result_budget(const qta_result* result);
long long qta_result_cache_hits(const qta_result* result);
long long qta_result_cache_misses(const qta_result* result);
int qta_result_iterations(const qta_result* result);
const char* qta_result_termination(const qta_result* result);
/* Line-oriented run log; owned by the result. */
const char* qta_result_log(const qta_result* result);

qta_status qta_baseline_run(const qta_instance* inst, const qta_config* config,
                            unsigned long long seed, qta_baseline_result** out);
void qta_baseline_result_free(qta_baseline_result* result);
double qta_baseline_result_cost(const qta_baseline_result* result);
int qta_baseline_result_access_equivalent(const qta_baseline_result* result);
int qta_baseline_result_tour_length(const qta_baseline_result* result);
qta_status qta_baseline_result_tour(const qta_baseline_result* result, int* buf, int buf_len);

/* ---- artifacts --------------------------------------------------------- */

/* SVG drawing of the result tour (cluster-colored subroutes, dashed
 * bridges). *out is malloc'd; release with qta_string_free. */
qta_status qta_render_svg(const qta_instance* inst, const qta_result* result, char** out);

/* Coordinate-list export ("i j value" lines) of the sub-QUBO for one
 * cluster of cities. *out is malloc'd; release with qta_string_free. */
qta_status qta_export_cluster_qubo(const qta_instance* inst, const int* cluster, int len,
                                   char** out);

void qta_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QTA_H */
