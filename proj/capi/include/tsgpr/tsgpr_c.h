/* C interface to the two-stage GPR constitutive modeling library.
 *
 * All functions returning int use 0 for success and a negative
 * TSGPR_ERR_* code on failure; tsgpr_last_error() returns a message for
 * the most recent failure on the calling thread. Strings returned by
 * the library are heap-allocated and must be released with
 * tsgpr_string_free().
 */
#ifndef TSGPR_C_H
#define TSGPR_C_H

#ifdef __cplusplus
extern "C" {
#endif

#define TSGPR_OK 0
#define TSGPR_ERR_INVALID_ARGUMENT -1
#define TSGPR_ERR_IO -2
#define TSGPR_ERR_NUMERIC -3
#define TSGPR_ERR_CONFIG -4
#define TSGPR_ERR_INTERNAL -5

typedef struct tsgpr_model tsgpr_model; /* opaque two-stage model handle */

const char* tsgpr_version(void);

/* Message for the last error on this thread; empty string if none. */
const char* tsgpr_last_error(void);

void tsgpr_string_free(char* s);

/* Generate a synthetic ground-truth dataset CSV from a generator
 * config (JSON, see README) and write it to out_csv_path. */
int tsgpr_generate(const char* config_json, const char* out_csv_path);

/* Train the two-stage model per the run config. On success returns a
 * model handle; if report_json_out is non-null it receives a training
 * report (NLML values, penalty residuals, W/chi trace). */
tsgpr_model* tsgpr_fit(const char* config_json, char** report_json_out);

int tsgpr_model_save(const tsgpr_model* model, const char* path);
tsgpr_model* tsgpr_model_load(const char* path);
void tsgpr_model_free(tsgpr_model* model);

/* Evaluate the model along a deformation path. path_spec_json:
 *   {"mode": "uniaxial_tension", "range": [1.0, 1.5],
 *    "n_points": 51, "nu": 0.49}
 * Returns CSV text: parameter,S11..S23,W,psi,chi. */
char* tsgpr_predict_csv(const tsgpr_model* model, const char* path_spec_json);

/* Stage-II energy trace (index,parameter,W,chi) for a dataset CSV
 * evaluated with the model's Stage-I regressors. */
char* tsgpr_export_trace_csv(const tsgpr_model* model, const char* dataset_csv_path);

/* Critical failure energy by extending the training deformation mode
 * to max_parameter. converged_out receives 0/1. */
int tsgpr_failure_energy(const tsgpr_model* model, double max_parameter, double* psi_f_out,
                         int* converged_out);

/* Train and evaluate all four models per the run config; returns a
 * JSON report and writes per-point error CSVs to the configured
 * output directory. */
char* tsgpr_benchmark(const char* config_json);

#ifdef __cplusplus
}
#endif

#endif /* TSGPR_C_H */
