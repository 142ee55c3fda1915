// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_DENSITY_OPERATOR_HPP
#define COHENG_DENSITY_OPERATOR_HPP

#include <Eigen/Dense>
#include <complex>

#include "coheng/energy_basis.hpp"

namespace coheng {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Dense quantum state annotated with its energy basis.
///
/// Construction enforces Hermiticity (1e-12) and unit trace (1e-10).
/// Positive semidefiniteness (eigenvalues >= -1e-10) is enforced wherever a
/// spectral decomposition is taken, and eagerly by validate().
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, EnergyBasis basis);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const EnergyBasis& basis() const { return basis_; }

  /// Full invariant check including the spectrum; throws on violation.
  void validate() const;

 private:
  ComplexMatrix matrix_;
  EnergyBasis basis_;
};

}  // namespace coheng

#endif
