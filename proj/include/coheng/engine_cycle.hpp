// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_ENGINE_CYCLE_HPP
#define COHENG_ENGINE_CYCLE_HPP

#include "coheng/jc_charging.hpp"

namespace coheng {

struct EngineOperatingPoint {
  int n_qubits = 1;
  double beta_omega0 = 1.0;
  double gt = 0.0;
  BathSpec bath;

  static EngineOperatingPoint make(int n_qubits, double beta_omega0, double gt,
                                   double acc = default_accuracy);
  void validate() const;
};

/// Engine metrics at one operating point. Energies are in units of omega0
/// with k_B = hbar = 1, so W_coh = C_int / (beta omega0).
struct CyclePerformance {
  double c_ext_per_qubit = 0.0;  // external coherence of one charged qubit
  double c_int_total = 0.0;      // activated internal coherence of the N copies
  double s_bath = 0.0;           // bath entropy per charging event
  double w_coh = 0.0;            // extractable coherent work
  double q_in = 0.0;             // input coherence flow
  double eta = 0.0;              // w_coh / q_in, 0 at the degenerate point
};

/// Finite-difference rates at one point, per unit gt.
struct RateReport {
  double heat_rate = 0.0;              // beta d/dt Tr[rho_S H_S]
  double entropy_production = 0.0;     // dS/dt - heat_rate
  double coherence_change_rate = 0.0;  // d/dt S(rho_S || gamma_S)
};

/// C_int(rho_s^{\otimes n}) = n S(diag) - S(D(rho^{\otimes n})), with the
/// dephasing blocks grouped by Hamming weight (label 2k - n) and each block
/// eigendecomposed directly. Expects diag(rho_s) thermal (the charged-qubit
/// invariant); errors when n exceeds the configured qubit cap.
double activated_internal_coherence(const ComplexMatrix& rho_s, int n);

CyclePerformance cycle_performance(const EngineOperatingPoint& op);

/// Same metrics from an already charged qubit (rho_s 2x2) and a known bath
/// entropy; used to study invariances without re-running the evolution.
CyclePerformance cycle_performance_from_state(const ComplexMatrix& rho_s, double s_bath,
                                              int n_qubits, double beta_omega0);

/// Per-qubit internal coherence of n copies of the pure maximally coherent
/// qubit: [n S(gamma_S) - H(binomial-Boltzmann block weights)] / n.
/// Defined for beta_omega0 >= 0 (no bath involved).
double maximally_coherent_benchmark(double beta_omega0, int n);

RateReport rate_checks(double beta_omega0, double gt, double h = 1e-4,
                       double acc = default_accuracy);

/// | [-dC_ext(S) - dC_ext(B)] - C_ext(S:B) | with every term computed
/// independently from the evolved joint state.
double conservation_check(double beta_omega0, double gt, double acc = default_accuracy);

}  // namespace coheng

#endif
