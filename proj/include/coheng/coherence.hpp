// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_COHERENCE_HPP
#define COHENG_COHERENCE_HPP

#include "coheng/operator_core.hpp"

namespace coheng {

/// Internal, external, and total coherence in nats.
///
/// c_int = S(Delta(rho)) - S(D(rho)) lives between degenerate levels and is
/// the only part convertible to work; c_ext = S(D(rho)) - S(rho) sits between
/// distinct energies and is work-locked. c_tot is computed independently as
/// S(rho || Delta(rho)) and agrees with c_int + c_ext to 1e-9.
struct CoherenceReport {
  double c_int = 0.0;
  double c_ext = 0.0;
  double c_tot = 0.0;
};

/// Remove every off-diagonal element (classical energy distribution).
DensityOperator fully_dephase(const DensityOperator& rho);

/// Keep only the energy block-diagonal part: sum_E P_E rho P_E with blocks
/// grouped by equal integer label.
DensityOperator block_dephase(const DensityOperator& rho);

/// Entropy of the block-diagonal part, accumulated block by block.
double block_entropy(const DensityOperator& rho);

CoherenceReport coherence_report(const DensityOperator& rho);

/// C_ext(rho_SB) - C_ext(rho_S) - C_ext(rho_B): external coherence stored in
/// the correlations between the two subsystems.
double correlated_external_coherence(const DensityOperator& rho_sb, const EnergyBasis& basis_s,
                                     const EnergyBasis& basis_b);

}  // namespace coheng

#endif
