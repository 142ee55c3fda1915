// SPDX-License-Identifier: Apache-2.0
#include "coheng/optimizer.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace coheng {

namespace {
constexpr double beta_floor = 0.01;
constexpr double simplex_tolerance = 1e-3;
constexpr int max_evaluations = 200;
}  // namespace

void SweepGrid::validate() const {
  if (!(beta.min < beta.max) || !(gt.min < gt.max))
    throw std::invalid_argument("grid axis needs min < max");
  if (beta.steps < 2 || gt.steps < 2) throw std::invalid_argument("grid axis needs >= 2 steps");
  if (!(beta.min > 0.0)) throw std::invalid_argument("beta axis must start above 0");
  if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers = std::min<unsigned>(hw == 0 ? 1 : hw, 16);
  if (workers <= 1 || count < 4) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

double evaluate_objective(Objective objective, double beta_omega0, double gt, int n_qubits,
                          double acc) {
  const double beta = std::max(beta_omega0, beta_floor);
  const double time = std::max(gt, 0.0);
  const BathSpec spec = BathSpec::make(beta, acc);
  const JcBranches branches(gibbs_qubit(beta).matrix(), spec, time);
  if (objective == Objective::external_coherence)
    return coherence_report(
               DensityOperator(ComplexMatrix(branches.reduced_system()), EnergyBasis::qubit()))
        .c_ext;
  return cycle_performance_from_state(branches.reduced_system(), branches.bath_entropy(),
                                      n_qubits, beta)
      .eta;
}

std::vector<GridPoint> grid_sweep(const SweepGrid& grid) {
  grid.validate();
  const auto axis_value = [](const AxisSpec& axis, int i) {
    return axis.min + (axis.max - axis.min) * i / (axis.steps - 1);
  };
  std::vector<GridPoint> table(static_cast<size_t>(grid.beta.steps) * grid.gt.steps);
  parallel_for(static_cast<int>(table.size()), [&](int idx) {
    const int bi = idx / grid.gt.steps;
    const int gi = idx % grid.gt.steps;
    GridPoint& p = table[static_cast<size_t>(idx)];
    p.beta_omega0 = std::max(axis_value(grid.beta, bi), beta_floor);
    p.gt = std::max(axis_value(grid.gt, gi), 0.0);
    p.value = evaluate_objective(grid.objective, p.beta_omega0, p.gt, grid.n_qubits, grid.acc);
  });
  return table;
}

GridPoint grid_argmax(const std::vector<GridPoint>& table) {
  if (table.empty()) throw std::invalid_argument("empty sweep table");
  const GridPoint* best = &table.front();
  for (const GridPoint& p : table)
    if (p.value > best->value) best = &p;  // strict: first node wins ties
  return *best;
}

OptimizationResult refine(double beta_omega0, double gt, Objective objective, int n_qubits,
                          double acc, const SweepGrid& domain) {
  domain.validate();
  const auto clip = [&](GridPoint p) {
    p.beta_omega0 = std::clamp(p.beta_omega0, std::max(domain.beta.min, beta_floor),
                               domain.beta.max);
    p.gt = std::clamp(p.gt, std::max(domain.gt.min, 0.0), domain.gt.max);
    return p;
  };
  if (beta_omega0 < domain.beta.min || beta_omega0 > domain.beta.max || gt < domain.gt.min ||
      gt > domain.gt.max)
    throw std::invalid_argument("refine start point outside the domain");

  OptimizationResult result;
  int evaluations = 0;
  const auto eval = [&](GridPoint p) {
    p = clip(p);
    p.value = evaluate_objective(objective, p.beta_omega0, p.gt, n_qubits, acc);
    result.trace.push_back(p);
    ++evaluations;
    return p;
  };
  // highest value first; ties toward smaller beta, then smaller gt
  const auto better = [](const GridPoint& a, const GridPoint& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.beta_omega0 != b.beta_omega0) return a.beta_omega0 < b.beta_omega0;
    return a.gt < b.gt;
  };

  const double step_beta = 0.05 * (domain.beta.max - domain.beta.min) / 2.95;
  const double step_gt = 0.5 * (domain.gt.max - domain.gt.min) / 30.0;
  std::array<GridPoint, 3> simplex{
      eval({beta_omega0, gt, 0.0}),
      eval({beta_omega0 + step_beta, gt, 0.0}),
      eval({beta_omega0, gt + step_gt, 0.0}),
  };

  bool converged = false;
  while (evaluations < max_evaluations) {
    std::sort(simplex.begin(), simplex.end(), better);
    const double span_beta =
        std::max({simplex[0].beta_omega0, simplex[1].beta_omega0, simplex[2].beta_omega0}) -
        std::min({simplex[0].beta_omega0, simplex[1].beta_omega0, simplex[2].beta_omega0});
    const double span_gt = std::max({simplex[0].gt, simplex[1].gt, simplex[2].gt}) -
                           std::min({simplex[0].gt, simplex[1].gt, simplex[2].gt});
    if (span_beta < simplex_tolerance && span_gt < simplex_tolerance) {
      converged = true;
      break;
    }
    const double cb = (simplex[0].beta_omega0 + simplex[1].beta_omega0) / 2.0;
    const double cg = (simplex[0].gt + simplex[1].gt) / 2.0;
    const GridPoint& worst = simplex[2];
    const GridPoint reflected = eval({cb + (cb - worst.beta_omega0), cg + (cg - worst.gt), 0.0});
    if (better(reflected, simplex[0])) {
      const GridPoint expanded =
          eval({cb + 2.0 * (cb - worst.beta_omega0), cg + 2.0 * (cg - worst.gt), 0.0});
      simplex[2] = better(expanded, reflected) ? expanded : reflected;
    } else if (better(reflected, simplex[1])) {
      simplex[2] = reflected;
    } else {
      const GridPoint contracted =
          eval({cb + 0.5 * (worst.beta_omega0 - cb), cg + 0.5 * (worst.gt - cg), 0.0});
      if (better(contracted, simplex[2])) {
        simplex[2] = contracted;
      } else {
        // shrink toward the best vertex
        for (int i = 1; i < 3; ++i)
          simplex[static_cast<size_t>(i)] = eval(
              {simplex[0].beta_omega0 + 0.5 * (simplex[static_cast<size_t>(i)].beta_omega0 -
                                               simplex[0].beta_omega0),
               simplex[0].gt + 0.5 * (simplex[static_cast<size_t>(i)].gt - simplex[0].gt), 0.0});
      }
    }
  }

  GridPoint best = result.trace.front();
  for (const GridPoint& p : result.trace)
    if (better(p, best)) best = p;
  result.beta_omega0 = best.beta_omega0;
  result.gt = best.gt;
  result.value = best.value;
  result.refined = converged;
  return result;
}

std::vector<PerNOptimum> optimal_per_n(int n_max, Objective objective,
                                       const SweepGrid& grid_template) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<PerNOptimum> table;
  table.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    SweepGrid grid = grid_template;
    grid.objective = objective;
    grid.n_qubits = n;
    const GridPoint seed = grid_argmax(grid_sweep(grid));
    const OptimizationResult opt =
        refine(seed.beta_omega0, seed.gt, grid.objective, n, grid.acc, grid);
    PerNOptimum row;
    row.n_qubits = n;
    row.beta_omega0 = opt.beta_omega0;
    row.gt = opt.gt;
    row.value = opt.value;
    row.refined = opt.refined;
    row.performance =
        cycle_performance(EngineOperatingPoint::make(n, opt.beta_omega0, opt.gt, grid.acc));
    table.push_back(row);
  }
  return table;
}

}  // namespace coheng
