// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_COLLECTIVE_TC_HPP
#define COHENG_COLLECTIVE_TC_HPP

#include <cstdint>
#include <vector>

#include "coheng/engine_cycle.hpp"

namespace coheng {

/// N qubits collectively coupled to one bosonic mode, with per-qubit complex
/// coupling strengths in units of g.
struct TCSpec {
  int n_qubits = 2;
  std::vector<Complex> couplings;
  BathSpec bath;
  double gt = 0.0;

  void validate() const;
};

/// Default bath for a collective run: d* for the temperature plus n extra
/// levels, since up to n excitations can enter the mode.
BathSpec tc_default_bath(double beta_omega0, int n_qubits, double acc = default_accuracy);

/// sum_k g_k sigma_+^k a + conj(g_k) sigma_-^k a^dagger on 2^N * d dimensions,
/// qubit index major. Errors when the joint dimension exceeds the cap.
ComplexMatrix tc_interaction_hamiltonian(const TCSpec& spec);

/// Joint basis labels for the 2^N * d space.
EnergyBasis tc_joint_basis(int n_qubits, int bath_levels);

/// Evolve gamma_S^N x |gamma_B><gamma_B| by e^{-i H_I gt} via the dense
/// Hermitian eigensystem (interaction picture).
DensityOperator tc_evolve(const TCSpec& spec);

struct CollectiveChargingCheck {
  double internal_coherence = 0.0;         // C_int of the reduced system
  double block_residual = 0.0;             // max |P_E rho P_E - (e^{-bE}/Z^N) P_E|
};

/// After a collective interaction only external coherence can appear in the
/// system: C_int stays at numerical zero and every degenerate block stays
/// proportional to the identity.
CollectiveChargingCheck collective_charging_check(const TCSpec& spec);

struct ChargingComparisonRow {
  double gt = 0.0;
  double c_int_sequential = 0.0;  // charge one qubit, activate n copies
  double c_int_collective = 0.0;  // C_int after the collective interaction
};

std::vector<ChargingComparisonRow> sequential_vs_collective(int n, double beta_omega0,
                                                            const std::vector<double>& gt_grid,
                                                            double acc = default_accuracy);

/// Unit-modulus couplings with seeded uniform phases, for reproducible
/// falsification attempts.
std::vector<Complex> random_unit_couplings(int n, std::uint64_t seed);

}  // namespace coheng

#endif
