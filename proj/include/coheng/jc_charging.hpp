// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_JC_CHARGING_HPP
#define COHENG_JC_CHARGING_HPP

#include <optional>

#include "coheng/coherence.hpp"
#include "coheng/constants.hpp"
#include "coheng/operator_core.hpp"

namespace coheng {

/// Truncated coherent Gibbs bath for a resonant bosonic mode.
///
/// `dim` counts retained levels 0..dim-1 and must cover the effective
/// dimension d* for the requested accuracy; make() adds `margin` levels on top
/// of d*. Evolution appends one further level so every populated excitation
/// sector stays complete.
struct BathSpec {
  double beta_omega0 = 1.0;
  double acc = default_accuracy;
  int dim = 0;
  int margin = default_bath_margin;

  static BathSpec make(double beta_omega0, double acc = default_accuracy,
                       int margin = default_bath_margin);
  void validate() const;
};

/// Smallest truncation index d* keeping the coherence-amplitude series
/// accurate to `acc`, from the closed-form geometric remainder bound.
int effective_bath_dimension(double beta_omega0, double acc);

/// Upper bound on |delta_inf - delta_n| when the series is truncated after
/// index n: (1-r)^{-1} |c_{n+1}| with ratio r = e^{-beta omega0}.
double series_remainder_bound(double beta_omega0, int n, double gt, bool prefactor = true);

double qubit_partition_function(double beta_omega0);           // Z_S = 1 + e^{-b}
double bath_partition_function(double beta_omega0);            // Z_B = (1 - e^{-b})^{-1}
double truncated_bath_partition_function(double beta_omega0, int dim);

/// Thermal qubit gamma_S.
DensityOperator gibbs_qubit(double beta_omega0);
/// Pure maximally coherent qubit |gamma_S><gamma_S| (beta_omega0 >= 0).
DensityOperator maximally_coherent_qubit(double beta_omega0);
/// Pure coherent Gibbs bath state on spec.dim levels, renormalized.
DensityOperator coherent_bath_state(const BathSpec& spec);
/// Diagonal truncated Gibbs bath on `levels` levels (label 2n).
DensityOperator truncated_gibbs_bath(double beta_omega0, int levels);

/// Coherence amplitude delta: partial sum of the charged-qubit series through
/// index d inclusive. The default convention carries the e^{-beta omega0/2}
/// factor produced by the coherent Gibbs bath; prefactor=false evaluates the
/// bare series instead. The sign convention matches the sector-wise unitary:
/// <1|rho_S(t)|0> = delta / Z_S.
Complex coherence_amplitude(double beta_omega0, double gt, int d, bool prefactor = true);

/// Low-rank form of the evolved joint state: the initial system eigenvectors
/// tensored with the bath state, each propagated by the sector-wise unitary.
/// All reduced quantities derive from it in O(dim) to O(dim^2).
class JcBranches {
 public:
  JcBranches(const ComplexMatrix& rho_s0, const BathSpec& spec, double gt);

  int bath_levels() const { return bath_levels_; }  // spec.dim + 1
  double gt() const { return gt_; }

  Eigen::Matrix2cd reduced_system() const;
  Eigen::VectorXd bath_diagonal() const;
  double bath_entropy() const;   // spectrum via the rank-4 Gram matrix
  double joint_entropy() const;  // branch weights
  ComplexMatrix bath_matrix() const;
  ComplexMatrix joint_matrix() const;

 private:
  int bath_levels_;
  double gt_;
  std::vector<double> weights_;
  std::vector<Eigen::VectorXcd> branches_;  // joint vectors, qubit index major
};

/// Apply the resonant interaction-picture unitary sector by sector:
/// sector m >= 1 rotates span{|1,m-1>, |0,m>} by
/// [[cos(gt sqrt m), -i sin(gt sqrt m)], [-i sin(gt sqrt m), cos(gt sqrt m)]]
/// and |0,0> is invariant. `state` is a joint vector, qubit index major.
void apply_jc_unitary(Eigen::VectorXcd& state, int bath_levels, double gt);

/// Dense sector-wise unitary on 2 * bath_levels dimensions (for tests and
/// small verification runs).
ComplexMatrix jc_unitary_matrix(int bath_levels, double gt);

/// Evolve rho_s0 (2x2) against the coherent Gibbs bath and return the joint
/// state on 2 * (spec.dim + 1) dimensions.
DensityOperator jc_joint_evolution(const DensityOperator& rho_s0, const BathSpec& spec,
                                   double gt);

/// Outcome of charging one thermal qubit.
struct ChargeResult {
  DensityOperator rho_s;                  // analytic series state: gamma plus the delta off-diagonal
  DensityOperator rho_b;                  // evolved reduced bath, spec.dim + 1 levels
  std::optional<DensityOperator> rho_sb;  // evolved joint state, on request
  Complex delta;                          // series amplitude, prefactor convention
  double truncation_weight;               // discarded Boltzmann tail e^{-b d}
  double gt;
  double route_trace_distance;  // analytic vs evolved reduced system
};

ChargeResult charged_qubit_state(double beta_omega0, double gt, const BathSpec& spec,
                                 bool keep_joint = false);

/// Ground population and upper off-diagonal of the evolved system for an
/// arbitrary 2x2 initial state, from the explicit series over bath levels.
struct SystemComponents {
  double rho00;
  Complex rho01;
};
SystemComponents charged_components_series(const ComplexMatrix& rho_s0, const BathSpec& spec,
                                           double gt);

/// Closed forms of the two non-thermal initial conditions that break the
/// stationarity of the populations: rho_S(0) = |0><0| and
/// rho_S(0) = gamma_S + i kappa (|0><1| - |1><0|).
double population_pure_ground(double beta_omega0, double gt, int d);
double population_rotated_gibbs(double beta_omega0, double kappa, double gt, int d);

}  // namespace coheng

#endif
