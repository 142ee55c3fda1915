// SPDX-License-Identifier: Apache-2.0
#include "coheng.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "coheng/datasets.hpp"
#include "coheng/verify.hpp"

struct coheng_table {
  coheng::ResultTable table;
};

struct coheng_report {
  std::string json;
  bool passed = false;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
coheng_status guarded(Fn&& fn) {
  try {
    fn();
    return COHENG_OK;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return COHENG_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return COHENG_ERR_NUMERICAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COHENG_ERR_UNKNOWN;
  } catch (...) {
    last_error = "unknown failure";
    return COHENG_ERR_UNKNOWN;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

coheng::Objective parse_objective(const char* objective) {
  const std::string name = objective ? objective : "";
  if (name == "ext") return coheng::Objective::external_coherence;
  if (name == "eta") return coheng::Objective::efficiency;
  throw std::invalid_argument("objective must be 'ext' or 'eta'");
}

coheng::SweepGrid make_grid(int n_qubits, double beta_min, double beta_max, int beta_steps,
                            double gt_min, double gt_max, int gt_steps, double acc) {
  coheng::SweepGrid grid;
  grid.beta = {beta_min, beta_max, beta_steps};
  grid.gt = {gt_min, gt_max, gt_steps};
  grid.n_qubits = n_qubits;
  grid.acc = acc;
  grid.validate();
  return grid;
}

}  // namespace

extern "C" {

const char* coheng_version(void) { return "0.1.0"; }

const char* coheng_last_error(void) { return last_error.c_str(); }

coheng_status coheng_effective_bath_dimension(double beta_omega0, double acc, int* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = coheng::effective_bath_dimension(beta_omega0, acc);
  });
}

coheng_status coheng_coherence_amplitude_abs(double beta_omega0, double gt, int d,
                                             int prefactor_on, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = std::abs(coheng::coherence_amplitude(beta_omega0, gt, d, prefactor_on != 0));
  });
}

coheng_status coheng_charge(double beta_omega0, double gt, int n_qubits, double acc,
                            int prefactor_on, coheng_table** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = new coheng_table{
        coheng::charge_dataset(beta_omega0, gt, n_qubits, acc, prefactor_on != 0)};
  });
}

coheng_status coheng_sweep(int n_qubits, double beta_min, double beta_max, int beta_steps,
                           double gt_min, double gt_max, int gt_steps, double acc,
                           coheng_table** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    const coheng::SweepGrid grid =
        make_grid(n_qubits, beta_min, beta_max, beta_steps, gt_min, gt_max, gt_steps, acc);
    *out = new coheng_table{coheng::sweep_dataset(grid)};
  });
}

coheng_status coheng_optimize(const char* objective, int n_max, double beta_min,
                              double beta_max, int beta_steps, double gt_min, double gt_max,
                              int gt_steps, double acc, coheng_table** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    const coheng::SweepGrid grid =
        make_grid(1, beta_min, beta_max, beta_steps, gt_min, gt_max, gt_steps, acc);
    *out = new coheng_table{
        coheng::optimize_dataset(n_max, parse_objective(objective), grid)};
  });
}

coheng_status coheng_verify(const char* suite, uint64_t seed, double acc, coheng_report** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    if (!suite) throw std::invalid_argument("null suite name");
    const coheng::VerificationReport report = coheng::run_suite(suite, seed, acc);
    *out = new coheng_report{coheng::report_to_json(report), report.passed};
  });
}

coheng_status coheng_figure(const char* preset, int n_qubits, double acc, coheng_table** out,
                            coheng_report** out_report) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    if (!preset) throw std::invalid_argument("null preset name");
    coheng::FigureData data = coheng::figure_preset(preset, n_qubits, acc);
    *out = new coheng_table{std::move(data.table)};
    if (out_report)
      *out_report = data.report_json.empty()
                        ? nullptr
                        : new coheng_report{std::move(data.report_json), true};
  });
}

int coheng_table_rows(const coheng_table* table) { return table ? table->table.rows() : 0; }

int coheng_table_cols(const coheng_table* table) { return table ? table->table.cols() : 0; }

const char* coheng_table_column_name(const coheng_table* table, int col) {
  if (!table || col < 0 || col >= table->table.cols()) return nullptr;
  return table->table.column_name(col).c_str();
}

double coheng_table_value(const coheng_table* table, int row, int col) {
  if (!table || row < 0 || row >= table->table.rows() || col < 0 || col >= table->table.cols())
    return 0.0;
  return table->table.at(row, col);
}

coheng_status coheng_table_csv(const coheng_table* table, char** out) {
  return guarded([&] {
    if (!table || !out) throw std::invalid_argument("null argument");
    *out = copy_string(table->table.to_csv());
  });
}

coheng_status coheng_table_json(const coheng_table* table, char** out) {
  return guarded([&] {
    if (!table || !out) throw std::invalid_argument("null argument");
    *out = copy_string(table->table.to_json());
  });
}

int coheng_report_passed(const coheng_report* report) {
  return (report && report->passed) ? 1 : 0;
}

coheng_status coheng_report_json(const coheng_report* report, char** out) {
  return guarded([&] {
    if (!report || !out) throw std::invalid_argument("null argument");
    *out = copy_string(report->json);
  });
}

void coheng_table_free(coheng_table* table) { delete table; }

void coheng_report_free(coheng_report* report) { delete report; }

void coheng_string_free(char* str) { delete[] str; }

}  // extern "C"
