// SPDX-License-Identifier: Apache-2.0
#include "coheng/density_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "coheng/constants.hpp"
#include "coheng/operator_core.hpp"

namespace coheng {

DensityOperator::DensityOperator(ComplexMatrix matrix, EnergyBasis basis)
    : matrix_(std::move(matrix)), basis_(std::move(basis)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("density operator must be square");
  if (basis_.dim() != static_cast<int>(matrix_.rows()))
    throw std::invalid_argument("energy basis length does not match dimension");
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity)
    throw std::invalid_argument("density operator not Hermitian: deviation " +
                                std::to_string(herm));
  const double tr_err = std::abs(matrix_.trace().real() - 1.0) + std::abs(matrix_.trace().imag());
  if (tr_err > tol::trace_unit)
    throw std::invalid_argument("density operator trace deviates from 1 by " +
                                std::to_string(tr_err));
}

void DensityOperator::validate() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  if (lo < tol::positivity)
    throw std::invalid_argument("density operator has eigenvalue " + std::to_string(lo));
}

}  // namespace coheng
