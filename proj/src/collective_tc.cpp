// SPDX-License-Identifier: Apache-2.0
#include "coheng/collective_tc.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "coheng/constants.hpp"

namespace coheng {

namespace {
constexpr int joint_dimension_cap = 8192;
constexpr Complex kI{0.0, 1.0};
}  // namespace

void TCSpec::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
  if (static_cast<int>(couplings.size()) != n_qubits)
    throw std::invalid_argument("couplings length must equal n_qubits");
  if (!(gt >= 0.0)) throw std::invalid_argument("gt must be non-negative");
  bath.validate();
  const long dim = (1L << n_qubits) * bath.dim;
  if (dim > joint_dimension_cap)
    throw std::invalid_argument("joint dimension " + std::to_string(dim) + " exceeds cap " +
                                std::to_string(joint_dimension_cap));
}

BathSpec tc_default_bath(double beta_omega0, int n_qubits, double acc) {
  return BathSpec::make(beta_omega0, acc, n_qubits);
}

EnergyBasis tc_joint_basis(int n_qubits, int bath_levels) {
  return EnergyBasis::qubits(n_qubits).tensor(EnergyBasis::boson(bath_levels));
}

ComplexMatrix tc_interaction_hamiltonian(const TCSpec& spec) {
  spec.validate();
  const int nq = spec.n_qubits;
  const int d = spec.bath.dim;
  const int dim = (1 << nq) * d;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (unsigned iq = 0; iq < (1u << nq); ++iq) {
    for (int n = 1; n < d; ++n) {
      const int col = static_cast<int>(iq) * d + n;
      for (int k = 0; k < nq; ++k) {
        if ((iq >> k) & 1u) continue;  // qubit k already excited
        // sigma_+^k a : |0_k, n> -> sqrt(n) |1_k, n-1>
        const unsigned jq = iq | (1u << k);
        const int row = static_cast<int>(jq) * d + (n - 1);
        const Complex v = spec.couplings[static_cast<size_t>(k)] * std::sqrt(static_cast<double>(n));
        h(row, col) += v;
        h(col, row) += std::conj(v);
      }
    }
  }
  return h;
}

DensityOperator tc_evolve(const TCSpec& spec) {
  spec.validate();
  const int nq = spec.n_qubits;
  const int d = spec.bath.dim;
  const double b = spec.bath.beta_omega0;

  // gamma_S^n x |gamma_B><gamma_B|
  const double zs = qubit_partition_function(b);
  Eigen::VectorXcd amps(d);
  for (int n = 0; n < d; ++n) amps(n) = std::exp(-b * n / 2.0);
  amps /= amps.norm();
  const int dim = (1 << nq) * d;
  ComplexMatrix rho0 = ComplexMatrix::Zero(dim, dim);
  for (unsigned iq = 0; iq < (1u << nq); ++iq) {
    const double w = std::exp(-b * std::popcount(iq)) / std::pow(zs, nq);
    rho0.block(static_cast<int>(iq) * d, static_cast<int>(iq) * d, d, d) =
        w * (amps * amps.adjoint());
  }

  const Eigensystem eig = hermitian_eigensystem(tc_interaction_hamiltonian(spec));
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::exp(-kI * eig.eigenvalues(i) * spec.gt);
  const ComplexMatrix u = eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
  ComplexMatrix evolved = u * rho0 * u.adjoint();
  // Symmetrize away the O(eps) solver asymmetry before constructing the state.
  evolved = 0.5 * (evolved + evolved.adjoint().eval());
  return DensityOperator(std::move(evolved), tc_joint_basis(nq, d));
}

CollectiveChargingCheck collective_charging_check(const TCSpec& spec) {
  if (spec.n_qubits < 2) throw std::invalid_argument("collective check needs at least 2 qubits");
  const DensityOperator joint = tc_evolve(spec);
  const DensityOperator reduced = partial_trace(joint, EnergyBasis::qubits(spec.n_qubits),
                                                EnergyBasis::boson(spec.bath.dim), Subsystem::A);
  CollectiveChargingCheck result;
  result.internal_coherence = coherence_report(reduced).c_int;

  const int nq = spec.n_qubits;
  const double zs = qubit_partition_function(spec.bath.beta_omega0);
  double residual = 0.0;
  for (int k = 0; k <= nq; ++k) {
    std::vector<int> idx;
    for (unsigned m = 0; m < (1u << nq); ++m)
      if (std::popcount(m) == k) idx.push_back(static_cast<int>(m));
    const double c = std::exp(-spec.bath.beta_omega0 * k) / std::pow(zs, nq);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) {
        const Complex v = reduced.matrix()(idx[i], idx[j]);
        residual = std::max(residual, std::abs(v - (i == j ? Complex(c) : Complex(0.0))));
      }
  }
  result.block_residual = residual;
  return result;
}

std::vector<ChargingComparisonRow> sequential_vs_collective(int n, double beta_omega0,
                                                            const std::vector<double>& gt_grid,
                                                            double acc) {
  if (n < 2) throw std::invalid_argument("comparison needs at least 2 qubits");
  const BathSpec seq_bath = BathSpec::make(beta_omega0, acc);
  TCSpec tc;
  tc.n_qubits = n;
  tc.couplings.assign(static_cast<size_t>(n), Complex(1.0, 0.0));
  tc.bath = tc_default_bath(beta_omega0, n, acc);

  std::vector<ChargingComparisonRow> rows;
  rows.reserve(gt_grid.size());
  for (double gt : gt_grid) {
    ChargingComparisonRow row;
    row.gt = gt;
    const JcBranches branches(gibbs_qubit(beta_omega0).matrix(), seq_bath, gt);
    row.c_int_sequential =
        activated_internal_coherence(branches.reduced_system(), n);
    tc.gt = gt;
    const DensityOperator joint = tc_evolve(tc);
    const DensityOperator reduced = partial_trace(joint, EnergyBasis::qubits(n),
                                                  EnergyBasis::boson(tc.bath.dim), Subsystem::A);
    row.c_int_collective = coherence_report(reduced).c_int;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Complex> random_unit_couplings(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> gs;
  gs.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    // uniform phase from the top 53 bits, portable across standard libraries
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double phase = 2.0 * std::numbers::pi * u;
    gs.emplace_back(std::cos(phase), std::sin(phase));
  }
  return gs;
}

}  // namespace coheng
