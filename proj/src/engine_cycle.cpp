// SPDX-License-Identifier: Apache-2.0
#include "coheng/engine_cycle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "coheng/constants.hpp"

namespace coheng {

namespace {

double clamp_noise(double v) { return (v < 0.0 && v >= -tol::report_clamp) ? 0.0 : v; }

std::vector<std::vector<unsigned>> weight_masks(int n) {
  std::vector<std::vector<unsigned>> by_weight(static_cast<size_t>(n) + 1);
  for (unsigned m = 0; m < (1u << n); ++m)
    by_weight[static_cast<size_t>(std::popcount(m))].push_back(m);
  return by_weight;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

EngineOperatingPoint EngineOperatingPoint::make(int n_qubits, double beta_omega0, double gt,
                                                double acc) {
  EngineOperatingPoint op;
  op.n_qubits = n_qubits;
  op.beta_omega0 = beta_omega0;
  op.gt = gt;
  op.bath = BathSpec::make(beta_omega0, acc);
  op.validate();
  return op;
}

void EngineOperatingPoint::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
  if (n_qubits > max_qubits())
    throw std::invalid_argument("n_qubits " + std::to_string(n_qubits) + " exceeds cap " +
                                std::to_string(max_qubits()));
  if (!(gt >= 0.0)) throw std::invalid_argument("gt must be non-negative");
  bath.validate();
  if (bath.beta_omega0 != beta_omega0)
    throw std::invalid_argument("operating point and bath temperatures differ");
}

double activated_internal_coherence(const ComplexMatrix& rho_s, int n) {
  if (rho_s.rows() != 2 || rho_s.cols() != 2)
    throw std::invalid_argument("single-qubit state must be 2x2");
  if (n < 1) throw std::invalid_argument("copy count must be positive");
  if (n > max_qubits())
    throw std::invalid_argument("copy count " + std::to_string(n) + " exceeds cap " +
                                std::to_string(max_qubits()));

  const double diag[] = {rho_s(0, 0).real(), rho_s(1, 1).real()};
  const double s_gamma = entropy_from_spectrum(diag);

  double s_block = 0.0;
  for (const auto& masks : weight_masks(n)) {
    const int b = static_cast<int>(masks.size());
    ComplexMatrix block(b, b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        Complex v = 1.0;
        const unsigned x = masks[static_cast<size_t>(i)], y = masks[static_cast<size_t>(j)];
        for (int bit = 0; bit < n; ++bit) v *= rho_s((x >> bit) & 1u, (y >> bit) & 1u);
        block(i, j) = v;
      }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(block, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    s_block += entropy_from_spectrum({ev.data(), static_cast<size_t>(ev.size())});
  }
  return clamp_noise(n * s_gamma - s_block);
}

CyclePerformance cycle_performance(const EngineOperatingPoint& op) {
  op.validate();
  const JcBranches branches(gibbs_qubit(op.beta_omega0).matrix(), op.bath, op.gt);
  const Eigen::Matrix2cd rho_s = branches.reduced_system();
  return cycle_performance_from_state(rho_s, branches.bath_entropy(), op.n_qubits,
                                      op.beta_omega0);
}

CyclePerformance cycle_performance_from_state(const ComplexMatrix& rho_s, double s_bath,
                                              int n_qubits, double beta_omega0) {
  CyclePerformance perf;
  perf.s_bath = clamp_noise(s_bath);
  perf.c_ext_per_qubit =
      coherence_report(DensityOperator(rho_s, EnergyBasis::qubit())).c_ext;
  perf.c_int_total = activated_internal_coherence(rho_s, n_qubits);
  perf.w_coh = perf.c_int_total / beta_omega0;
  perf.q_in = n_qubits * perf.s_bath / beta_omega0;
  perf.eta = (perf.s_bath <= 1e-12) ? 0.0 : perf.c_int_total / (n_qubits * perf.s_bath);
  return perf;
}

double maximally_coherent_benchmark(double beta_omega0, int n) {
  if (n < 1) throw std::invalid_argument("copy count must be positive");
  if (beta_omega0 < 0.0) throw std::invalid_argument("beta_omega0 must be non-negative");
  const double b = beta_omega0;
  const double ln_zs = std::log1p(std::exp(-b));
  const double p1 = std::exp(-b) / (1.0 + std::exp(-b));
  const double s_gamma = (p1 >= 1e-300 && p1 <= 1.0 - 1e-16)
                             ? -p1 * std::log(p1) - (1.0 - p1) * std::log1p(-p1)
                             : 0.0;
  // Blocks of the pure n-copy state are rank one with binomial-Boltzmann
  // weights w_k = binom(n,k) e^{-b k} / Z_S^n.
  double h_blocks = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double lw = log_binomial(n, k) - b * k - n * ln_zs;
    const double w = std::exp(lw);
    if (w > tol::eig_clamp) h_blocks -= w * lw;
  }
  return clamp_noise(n * s_gamma - h_blocks) / n;
}

RateReport rate_checks(double beta_omega0, double gt, double h, double acc) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (!(gt > h)) throw std::invalid_argument("gt must exceed the step size");
  const BathSpec spec = BathSpec::make(beta_omega0, acc);
  const DensityOperator gamma = gibbs_qubit(beta_omega0);

  const auto state = [&](double g) {
    const JcBranches branches(gamma.matrix(), spec, g);
    return DensityOperator(ComplexMatrix(branches.reduced_system()), EnergyBasis::qubit());
  };
  const auto energy = [](const DensityOperator& r) {
    // Tr[rho H_S] with H_S = diag(-1/2, +1/2) in units of omega0
    return 0.5 * (r.matrix()(1, 1).real() - r.matrix()(0, 0).real());
  };

  const DensityOperator plus = state(gt + h), minus = state(gt - h);
  RateReport report;
  report.heat_rate = beta_omega0 * (energy(plus) - energy(minus)) / (2.0 * h);
  const double s_dot = (von_neumann_entropy(plus) - von_neumann_entropy(minus)) / (2.0 * h);
  report.entropy_production = s_dot - report.heat_rate;
  report.coherence_change_rate =
      (relative_entropy(plus, gamma) - relative_entropy(minus, gamma)) / (2.0 * h);
  return report;
}

double conservation_check(double beta_omega0, double gt, double acc) {
  const BathSpec spec = BathSpec::make(beta_omega0, acc);
  const EnergyBasis basis_s = EnergyBasis::qubit();
  const EnergyBasis basis_b = EnergyBasis::boson(spec.dim + 1);

  const DensityOperator joint = jc_joint_evolution(gibbs_qubit(beta_omega0), spec, gt);
  const DensityOperator rho_s = partial_trace(joint, basis_s, basis_b, Subsystem::A);
  const DensityOperator rho_b = partial_trace(joint, basis_s, basis_b, Subsystem::B);

  const double c_ext_s = coherence_report(rho_s).c_ext;  // initial system coherence is 0
  const double c_ext_b = coherence_report(rho_b).c_ext;
  // Initial bath: pure coherent Gibbs state extended by the spare level.
  ComplexMatrix bath0 = ComplexMatrix::Zero(spec.dim + 1, spec.dim + 1);
  bath0.topLeftCorner(spec.dim, spec.dim) = coherent_bath_state(spec).matrix();
  const double c_ext_b0 =
      coherence_report(DensityOperator(std::move(bath0), basis_b)).c_ext;

  const double lhs = -(c_ext_s - 0.0) - (c_ext_b - c_ext_b0);
  const double rhs = correlated_external_coherence(joint, basis_s, basis_b);
  return std::abs(lhs - rhs);
}

}  // namespace coheng
