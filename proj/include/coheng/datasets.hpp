// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_DATASETS_HPP
#define COHENG_DATASETS_HPP

#include <cstdint>
#include <string>

#include "coheng/optimizer.hpp"
#include "coheng/table.hpp"

namespace coheng {

/// Fixed engine-table column order shared by every emitted dataset.
/// Presets may append extra columns after these.
std::vector<std::string> engine_schema_columns();

std::vector<double> engine_schema_row(int n_qubits, double beta_omega0, double gt,
                                      const CyclePerformance& perf);

/// Single charging point; appends |delta| under the requested series
/// convention as a trailing column.
ResultTable charge_dataset(double beta_omega0, double gt, int n_qubits, double acc,
                           bool prefactor_on);

/// Full engine metrics on every node of the grid, row-major.
ResultTable sweep_dataset(const SweepGrid& grid);

/// Per-N optimization table; appends c_int_per_qubit and the refinement flag.
ResultTable optimize_dataset(int n_max, Objective objective, const SweepGrid& grid_template);

struct FigureData {
  ResultTable table;
  std::string report_json;  // empty when the preset carries no claims
};

/// Named presets: fig2a, fig2b, fig3, fig4, fig5, fig6, fig7.
/// fig2a/fig2b sweep the charging grid (plus a deep-low-temperature row at
/// beta omega0 = 20 probing the limit behaviour), fig4 sweeps efficiency for
/// the given N, fig3/fig5 emit the copy-count curves together with a
/// machine-readable agreement report, fig6/fig7 emit the non-thermal
/// population curves.
FigureData figure_preset(const std::string& preset, int n_qubits, double acc);

}  // namespace coheng

#endif
