// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_OPERATOR_CORE_HPP
#define COHENG_OPERATOR_CORE_HPP

#include <span>
#include <utility>

#include "coheng/density_operator.hpp"

namespace coheng {

enum class Subsystem { A, B };

/// Kronecker product, first factor major: index i_a * dim_b + i_b.
/// Output labels are sums of the factor labels.
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);

/// a \otimes a \otimes ... (n factors, n >= 1).
DensityOperator tensor_power(const DensityOperator& a, int n);

/// Reduced state of a bipartite operator laid out with the A index major.
/// The factor bases fix both the split and the output labels; they must be
/// consistent with the composite basis.
DensityOperator partial_trace(const DensityOperator& rho, const EnergyBasis& basis_a,
                              const EnergyBasis& basis_b, Subsystem keep);

struct Eigensystem {
  Eigen::VectorXd eigenvalues;  // ascending
  ComplexMatrix eigenvectors;   // unitary, columns match eigenvalues
};

/// Spectral decomposition of a Hermitian matrix (checked to 1e-10).
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// -sum(p ln p) of a probability-like vector; entries below 1e-14 are treated
/// as 0 and entries below -1e-10 are rejected.
double entropy_from_spectrum(std::span<const double> values);

/// Von Neumann entropy in nats.
double von_neumann_entropy(const DensityOperator& rho);

/// S(rho||sigma) = Tr[rho (ln rho - ln sigma)] in nats. Throws when the
/// support of rho is not contained in the support of sigma.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

/// (1/2) sum |eigenvalues of (a-b)|.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace coheng

#endif
