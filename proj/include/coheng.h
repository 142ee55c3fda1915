/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the coherence-engine simulator.
 *
 * Results come back as opaque table / report handles with accessor and
 * serialization functions; every entry point returns a status code and leaves
 * a human-readable message in coheng_last_error() on failure. Handles are
 * owned by the caller and released with the matching _free function.
 */
#ifndef COHENG_H
#define COHENG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coheng_status {
  COHENG_OK = 0,
  COHENG_ERR_INVALID_ARGUMENT = 1,
  COHENG_ERR_NUMERICAL = 2,
  COHENG_ERR_UNKNOWN = 3
} coheng_status;

typedef struct coheng_table coheng_table;
typedef struct coheng_report coheng_report;

const char* coheng_version(void);

/* Thread-local message describing the most recent failure. */
const char* coheng_last_error(void);

/* ---- scalar helpers ---- */

coheng_status coheng_effective_bath_dimension(double beta_omega0, double acc, int* out);

/* |delta| of the charged-qubit series through index d (prefactor_on selects
 * the e^{-beta omega0/2} convention confirmed by the unitary evolution). */
coheng_status coheng_coherence_amplitude_abs(double beta_omega0, double gt, int d,
                                             int prefactor_on, double* out);

/* ---- dataset producers ---- */

/* One charging point: engine metrics plus |delta|. */
coheng_status coheng_charge(double beta_omega0, double gt, int n_qubits, double acc,
                            int prefactor_on, coheng_table** out);

/* Engine metrics on every node of a (beta omega0, gt) grid, row-major. */
coheng_status coheng_sweep(int n_qubits, double beta_min, double beta_max, int beta_steps,
                           double gt_min, double gt_max, int gt_steps, double acc,
                           coheng_table** out);

/* Per-N optimization table, objective "ext" or "eta". */
coheng_status coheng_optimize(const char* objective, int n_max, double beta_min,
                              double beta_max, int beta_steps, double gt_min, double gt_max,
                              int gt_steps, double acc, coheng_table** out);

/* Verification suites: "observations", "conservation", "rates", "truncation",
 * "populations", "all". */
coheng_status coheng_verify(const char* suite, uint64_t seed, double acc, coheng_report** out);

/* Figure presets fig2a..fig7; out_report receives NULL when the preset has no
 * agreement report (pass NULL to discard). */
coheng_status coheng_figure(const char* preset, int n_qubits, double acc, coheng_table** out,
                            coheng_report** out_report);

/* ---- table access ---- */

int coheng_table_rows(const coheng_table* table);
int coheng_table_cols(const coheng_table* table);
const char* coheng_table_column_name(const coheng_table* table, int col);
double coheng_table_value(const coheng_table* table, int row, int col);

/* Serialized forms; free the returned string with coheng_string_free. */
coheng_status coheng_table_csv(const coheng_table* table, char** out);
coheng_status coheng_table_json(const coheng_table* table, char** out);

/* ---- report access ---- */

int coheng_report_passed(const coheng_report* report);
coheng_status coheng_report_json(const coheng_report* report, char** out);

void coheng_table_free(coheng_table* table);
void coheng_report_free(coheng_report* report);
void coheng_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* COHENG_H */
