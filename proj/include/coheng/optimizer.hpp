// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_OPTIMIZER_HPP
#define COHENG_OPTIMIZER_HPP

#include <functional>
#include <vector>

#include "coheng/engine_cycle.hpp"

namespace coheng {

enum class Objective { external_coherence, efficiency };

struct AxisSpec {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;
};

/// Discretized (beta omega0, gt) domain. beta is clamped above 0.01 (the
/// bath partition function diverges at 0) and gt below at 0.
struct SweepGrid {
  AxisSpec beta{0.01, 3.0, 60};
  AxisSpec gt{0.0, 30.0, 60};
  Objective objective = Objective::efficiency;
  int n_qubits = 1;
  double acc = default_accuracy;

  void validate() const;
};

struct GridPoint {
  double beta_omega0 = 0.0;
  double gt = 0.0;
  double value = 0.0;
};

double evaluate_objective(Objective objective, double beta_omega0, double gt, int n_qubits,
                          double acc);

/// Objective at every node, rows in row-major order (beta outer, gt inner).
/// Nodes are independent and evaluated by a deterministic parallel map.
std::vector<GridPoint> grid_sweep(const SweepGrid& grid);

/// Node with the largest value; ties resolve to the earliest row-major node,
/// i.e. smaller beta then smaller gt.
GridPoint grid_argmax(const std::vector<GridPoint>& table);

struct OptimizationResult {
  double beta_omega0 = 0.0;
  double gt = 0.0;
  double value = 0.0;
  std::vector<GridPoint> trace;  // every evaluation in order
  bool refined = false;          // simplex converged
};

/// Derivative-free downhill-simplex ascent from a start point, with domain
/// clipping. Stops when the simplex diameter drops below 1e-3 in both
/// coordinates or after 200 evaluations; never returns less than the start
/// value. Coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
OptimizationResult refine(double beta_omega0, double gt, Objective objective, int n_qubits,
                          double acc = default_accuracy,
                          const SweepGrid& domain = SweepGrid{});

struct PerNOptimum {
  int n_qubits = 0;
  double beta_omega0 = 0.0;
  double gt = 0.0;
  double value = 0.0;
  CyclePerformance performance;  // engine metrics at the optimum
  bool refined = false;
};

/// Grid sweep plus local refinement for every N in [1, n_max]; also reports
/// C_int per qubit at each per-N optimum via the attached performance.
std::vector<PerNOptimum> optimal_per_n(int n_max, Objective objective,
                                       const SweepGrid& grid_template = SweepGrid{});

/// Deterministic parallel map used by grid sweeps: results land by index, so
/// output never depends on scheduling.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace coheng

#endif
