// SPDX-License-Identifier: Apache-2.0
#include "coheng/operator_core.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "coheng/constants.hpp"

namespace coheng {

int max_qubits() {
  static const int cap = [] {
    if (const char* env = std::getenv("ENGINE_MAX_QUBITS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return default_max_qubits;
  }();
  return cap;
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  const int da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
  return DensityOperator(std::move(out), a.basis().tensor(b.basis()));
}

DensityOperator tensor_power(const DensityOperator& a, int n) {
  if (n < 1) throw std::invalid_argument("tensor power needs n >= 1");
  DensityOperator out = a;
  for (int k = 1; k < n; ++k) out = tensor_product(out, a);
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const EnergyBasis& basis_a,
                              const EnergyBasis& basis_b, Subsystem keep) {
  const int da = basis_a.dim(), db = basis_b.dim();
  if (da * db != rho.dim())
    throw std::invalid_argument("partial trace: factor dimensions do not multiply to " +
                                std::to_string(rho.dim()));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      if (rho.basis().label(i * db + j) != basis_a.label(i) + basis_b.label(j))
        throw std::invalid_argument("partial trace: composite labels are not factor sums");

  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += rho.matrix()(i * db + k, j * db + k);
    return DensityOperator(std::move(out), basis_a);
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int k = 0; k < da; ++k)
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < db; ++j) out(i, j) += rho.matrix()(k * db + i, k * db + j);
  return DensityOperator(std::move(out), basis_b);
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigensystem needs a square matrix");
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity_loose)
    throw std::invalid_argument("matrix not Hermitian: deviation " + std::to_string(herm));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Hermitian eigensolver failed to converge");
  return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

double entropy_from_spectrum(std::span<const double> values) {
  double s = 0.0;
  for (double v : values) {
    if (v <= tol::eig_clamp) {
      if (v < tol::positivity)
        throw std::invalid_argument("spectrum entry " + std::to_string(v) +
                                    " below positivity tolerance");
      continue;
    }
    s -= v * std::log(v);
  }
  return s;
}

double von_neumann_entropy(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return entropy_from_spectrum({ev.data(), static_cast<size_t>(ev.size())});
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("relative entropy: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> sr(rho.matrix(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& p = sr.eigenvalues();
  double tr_rho_ln_rho = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    const double v = p(i);
    if (v <= tol::eig_clamp) {
      if (v < tol::positivity)
        throw std::invalid_argument("relative entropy: rho eigenvalue " + std::to_string(v));
      continue;
    }
    tr_rho_ln_rho += v * std::log(v);
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ss(sigma.matrix());
  const Eigen::VectorXd& q = ss.eigenvalues();
  double tr_rho_ln_sigma = 0.0;
  for (int j = 0; j < q.size(); ++j) {
    const Eigen::VectorXcd v = ss.eigenvectors().col(j);
    const double overlap = std::max(0.0, (v.adjoint() * rho.matrix() * v)(0, 0).real());
    if (q(j) <= tol::support) {
      if (overlap > 1e-10)
        throw std::domain_error("infinite relative entropy: support of rho not in sigma");
      continue;
    }
    tr_rho_ln_sigma += overlap * std::log(q(j));
  }
  return tr_rho_ln_rho - tr_rho_ln_sigma;
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix() - b.matrix(),
                                                      Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace coheng
