// SPDX-License-Identifier: Apache-2.0
#include "coheng/jc_charging.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "coheng/constants.hpp"

namespace coheng {

namespace {
constexpr Complex kI{0.0, 1.0};
}

BathSpec BathSpec::make(double beta_omega0, double acc, int margin) {
  BathSpec spec;
  spec.beta_omega0 = beta_omega0;
  spec.acc = acc;
  spec.margin = margin;
  spec.dim = effective_bath_dimension(beta_omega0, acc) + margin;
  spec.validate();
  return spec;
}

void BathSpec::validate() const {
  if (!(beta_omega0 > 0.0)) throw std::invalid_argument("beta_omega0 must be positive");
  if (!(acc > 0.0 && acc < 1.0)) throw std::invalid_argument("acc must lie in (0, 1)");
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  const int dstar = effective_bath_dimension(beta_omega0, acc);
  if (dim < dstar)
    throw std::invalid_argument("bath dimension " + std::to_string(dim) +
                                " below effective dimension " + std::to_string(dstar));
}

int effective_bath_dimension(double beta_omega0, double acc) {
  if (!(beta_omega0 > 0.0)) throw std::invalid_argument("beta_omega0 must be positive");
  if (!(acc > 0.0 && acc < 1.0)) throw std::invalid_argument("acc must lie in (0, 1)");
  const double b = beta_omega0;
  const double v = -(1.0 + std::log(acc * (std::exp(-b / 2) + std::exp(b / 2))) / b);
  const int d = static_cast<int>(std::ceil(v));
  return d < 1 ? 1 : d;
}

double series_remainder_bound(double beta_omega0, int n, double gt, bool prefactor) {
  if (!(beta_omega0 > 0.0)) throw std::invalid_argument("beta_omega0 must be positive");
  const double b = beta_omega0;
  const double r = std::exp(-b);
  const double pre = prefactor ? std::exp(-b / 2) : 1.0;
  const double gap = std::sqrt(static_cast<double>(n) + 2.0) - std::sqrt(n + 1.0);
  const double c_next = (1.0 - r) * pre * std::exp(-b * (n + 1)) * std::abs(std::sin(gt * gap));
  return c_next / (1.0 - r);
}

double qubit_partition_function(double beta_omega0) { return 1.0 + std::exp(-beta_omega0); }

double bath_partition_function(double beta_omega0) {
  return 1.0 / (1.0 - std::exp(-beta_omega0));
}

double truncated_bath_partition_function(double beta_omega0, int dim) {
  const double r = std::exp(-beta_omega0);
  return (1.0 - std::pow(r, dim)) / (1.0 - r);
}

DensityOperator gibbs_qubit(double beta_omega0) {
  if (!(beta_omega0 > 0.0)) throw std::invalid_argument("beta_omega0 must be positive");
  const double zs = qubit_partition_function(beta_omega0);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 / zs;
  m(1, 1) = std::exp(-beta_omega0) / zs;
  return DensityOperator(std::move(m), EnergyBasis::qubit());
}

DensityOperator maximally_coherent_qubit(double beta_omega0) {
  if (beta_omega0 < 0.0) throw std::invalid_argument("beta_omega0 must be non-negative");
  const double zs = qubit_partition_function(beta_omega0);
  Eigen::Vector2cd v;
  v << 1.0 / std::sqrt(zs), std::exp(-beta_omega0 / 2) / std::sqrt(zs);
  ComplexMatrix m = v * v.adjoint();
  return DensityOperator(std::move(m), EnergyBasis::qubit());
}

DensityOperator coherent_bath_state(const BathSpec& spec) {
  spec.validate();
  Eigen::VectorXcd amps(spec.dim);
  for (int n = 0; n < spec.dim; ++n) amps(n) = std::exp(-spec.beta_omega0 * n / 2.0);
  amps /= amps.norm();
  ComplexMatrix m = amps * amps.adjoint();
  return DensityOperator(std::move(m), EnergyBasis::boson(spec.dim));
}

DensityOperator truncated_gibbs_bath(double beta_omega0, int levels) {
  const double zt = truncated_bath_partition_function(beta_omega0, levels);
  ComplexMatrix m = ComplexMatrix::Zero(levels, levels);
  for (int n = 0; n < levels; ++n) m(n, n) = std::exp(-beta_omega0 * n) / zt;
  return DensityOperator(std::move(m), EnergyBasis::boson(levels));
}

Complex coherence_amplitude(double beta_omega0, double gt, int d, bool prefactor) {
  if (d < 1) throw std::invalid_argument("series index must be >= 1");
  if (!(beta_omega0 > 0.0)) throw std::invalid_argument("beta_omega0 must be positive");
  const double b = beta_omega0;
  double sum = 0.0;
  for (int p = 0; p <= d; ++p) {
    const double gap = std::sqrt(p + 1.0) - std::sqrt(static_cast<double>(p));
    sum += std::exp(-b * p) * std::sin(gt * gap);
  }
  const double pre = prefactor ? std::exp(-b / 2) : 1.0;
  // 1/Z_B = 1 - e^{-b}; the -i sign matches <1|rho_S(t)|0> of the sector-wise
  // unitary evolution (checked against it in the tests).
  return -kI * pre * (1.0 - std::exp(-b)) * sum;
}

void apply_jc_unitary(Eigen::VectorXcd& state, int bath_levels, double gt) {
  if (state.size() != 2 * bath_levels)
    throw std::invalid_argument("joint vector length does not match bath dimension");
  for (int m = 1; m < bath_levels; ++m) {
    const double c = std::cos(gt * std::sqrt(static_cast<double>(m)));
    const double s = std::sin(gt * std::sqrt(static_cast<double>(m)));
    const Complex up = state(bath_levels + m - 1);  // |1, m-1>
    const Complex lo = state(m);                    // |0, m>
    state(bath_levels + m - 1) = c * up - kI * s * lo;
    state(m) = -kI * s * up + c * lo;
  }
}

ComplexMatrix jc_unitary_matrix(int bath_levels, double gt) {
  const int dim = 2 * bath_levels;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (int m = 1; m < bath_levels; ++m) {
    const double c = std::cos(gt * std::sqrt(static_cast<double>(m)));
    const double s = std::sin(gt * std::sqrt(static_cast<double>(m)));
    const int up = bath_levels + m - 1, lo = m;
    u(up, up) = c;
    u(lo, lo) = c;
    u(up, lo) = -kI * s;
    u(lo, up) = -kI * s;
  }
  return u;
}

JcBranches::JcBranches(const ComplexMatrix& rho_s0, const BathSpec& spec, double gt)
    : bath_levels_(spec.dim + 1), gt_(gt) {
  if (rho_s0.rows() != 2 || rho_s0.cols() != 2)
    throw std::invalid_argument("initial system state must be 2x2");
  spec.validate();

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(bath_levels_);
  for (int n = 0; n < spec.dim; ++n) amps(n) = std::exp(-spec.beta_omega0 * n / 2.0);
  amps /= amps.norm();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho_s0);
  for (int k = 0; k < 2; ++k) {
    const double w = solver.eigenvalues()(k);
    if (w < tol::positivity)
      throw std::invalid_argument("initial system state has eigenvalue " + std::to_string(w));
    if (w <= tol::eig_clamp) continue;
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(2 * bath_levels_);
    const Eigen::Vector2cd v = solver.eigenvectors().col(k);
    phi.segment(0, bath_levels_) = v(0) * amps;
    phi.segment(bath_levels_, bath_levels_) = v(1) * amps;
    apply_jc_unitary(phi, bath_levels_, gt);
    weights_.push_back(w);
    branches_.push_back(std::move(phi));
  }
}

Eigen::Matrix2cd JcBranches::reduced_system() const {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  for (size_t k = 0; k < branches_.size(); ++k) {
    const auto& phi = branches_[k];
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        // <s|rho_S|t> = sum_n phi[s,n] conj(phi[t,n])
        r(s, t) += weights_[k] * phi.segment(t * bath_levels_, bath_levels_)
                                     .dot(phi.segment(s * bath_levels_, bath_levels_));
  }
  return r;
}

Eigen::VectorXd JcBranches::bath_diagonal() const {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(bath_levels_);
  for (size_t k = 0; k < branches_.size(); ++k)
    for (int s = 0; s < 2; ++s)
      p += weights_[k] *
           branches_[k].segment(s * bath_levels_, bath_levels_).cwiseAbs2();
  return p;
}

double JcBranches::bath_entropy() const {
  // rho_B = sum_k w_k sum_s |v_{k,s}><v_{k,s}|; its nonzero spectrum equals
  // that of the Gram matrix of the weighted bath vectors.
  std::vector<Eigen::VectorXcd> vs;
  for (size_t k = 0; k < branches_.size(); ++k)
    for (int s = 0; s < 2; ++s)
      vs.push_back(std::sqrt(weights_[k]) *
                   branches_[k].segment(s * bath_levels_, bath_levels_));
  const int r = static_cast<int>(vs.size());
  ComplexMatrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram(i, j) = vs[static_cast<size_t>(i)].dot(vs[static_cast<size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return entropy_from_spectrum({ev.data(), static_cast<size_t>(ev.size())});
}

double JcBranches::joint_entropy() const {
  return entropy_from_spectrum({weights_.data(), weights_.size()});
}

ComplexMatrix JcBranches::bath_matrix() const {
  ComplexMatrix r = ComplexMatrix::Zero(bath_levels_, bath_levels_);
  for (size_t k = 0; k < branches_.size(); ++k)
    for (int s = 0; s < 2; ++s) {
      const Eigen::VectorXcd v = branches_[k].segment(s * bath_levels_, bath_levels_);
      r += weights_[k] * (v * v.adjoint());
    }
  return r;
}

ComplexMatrix JcBranches::joint_matrix() const {
  ComplexMatrix r = ComplexMatrix::Zero(2 * bath_levels_, 2 * bath_levels_);
  for (size_t k = 0; k < branches_.size(); ++k)
    r += weights_[k] * (branches_[k] * branches_[k].adjoint());
  return r;
}

DensityOperator jc_joint_evolution(const DensityOperator& rho_s0, const BathSpec& spec,
                                   double gt) {
  if (rho_s0.dim() != 2) throw std::invalid_argument("system state must be 2x2");
  const JcBranches branches(rho_s0.matrix(), spec, gt);
  return DensityOperator(branches.joint_matrix(),
                         EnergyBasis::qubit().tensor(EnergyBasis::boson(spec.dim + 1)));
}

ChargeResult charged_qubit_state(double beta_omega0, double gt, const BathSpec& spec,
                                 bool keep_joint) {
  spec.validate();
  const double zs = qubit_partition_function(beta_omega0);
  const Complex delta = coherence_amplitude(beta_omega0, gt, spec.dim);

  ComplexMatrix analytic = ComplexMatrix::Zero(2, 2);
  analytic(0, 0) = 1.0 / zs;
  analytic(1, 1) = std::exp(-beta_omega0) / zs;
  analytic(1, 0) = delta / zs;
  analytic(0, 1) = std::conj(delta) / zs;
  DensityOperator rho_s(std::move(analytic), EnergyBasis::qubit());

  const JcBranches branches(gibbs_qubit(beta_omega0).matrix(), spec, gt);
  DensityOperator evolved(ComplexMatrix(branches.reduced_system()), EnergyBasis::qubit());
  const double agreement = trace_distance(rho_s, evolved);
  if (agreement > 4.0 * std::max(spec.acc, 1e-8))
    throw std::runtime_error("series and unitary routes disagree: trace distance " +
                             std::to_string(agreement));

  ChargeResult result{
      std::move(rho_s),
      DensityOperator(branches.bath_matrix(), EnergyBasis::boson(spec.dim + 1)),
      std::nullopt,
      delta,
      std::exp(-beta_omega0 * spec.dim),
      gt,
      agreement,
  };
  if (keep_joint)
    result.rho_sb = DensityOperator(
        branches.joint_matrix(), EnergyBasis::qubit().tensor(EnergyBasis::boson(spec.dim + 1)));
  return result;
}

SystemComponents charged_components_series(const ComplexMatrix& rho_s0, const BathSpec& spec,
                                           double gt) {
  if (rho_s0.rows() != 2 || rho_s0.cols() != 2)
    throw std::invalid_argument("initial system state must be 2x2");
  spec.validate();
  const double b = spec.beta_omega0;
  const int d = spec.dim;
  const double zt = truncated_bath_partition_function(b, d);
  // <p|rho_B|p'> = c_p c_p' with c_p = e^{-b p / 2} / sqrt(Z_trunc)
  const auto amp = [&](int p) {
    return (p >= 0 && p < d) ? std::exp(-b * p / 2.0) / std::sqrt(zt) : 0.0;
  };
  const Complex r00 = rho_s0(0, 0), r11 = rho_s0(1, 1), r01 = rho_s0(0, 1), r10 = rho_s0(1, 0);

  Complex rho00 = 0.0, rho01 = 0.0;
  for (int p = 0; p <= d; ++p) {
    const double sp = std::sin(gt * std::sqrt(static_cast<double>(p)));
    const double cp = std::cos(gt * std::sqrt(static_cast<double>(p)));
    const double sp1 = std::sin(gt * std::sqrt(p + 1.0));
    const double cp1 = std::cos(gt * std::sqrt(p + 1.0));
    rho00 += cp * cp * r00 * amp(p) * amp(p) + sp * sp * r11 * amp(p - 1) * amp(p - 1) +
             kI * sp * cp * r01 * amp(p) * amp(p - 1) - kI * sp * cp * r10 * amp(p - 1) * amp(p);
    rho01 += kI * sp1 * cp * r00 * amp(p) * amp(p + 1) - kI * sp * cp1 * r11 * amp(p - 1) * amp(p) +
             cp * cp1 * r01 * amp(p) * amp(p) + sp * sp1 * r10 * amp(p - 1) * amp(p + 1);
  }
  return SystemComponents{rho00.real(), rho01};
}

double population_pure_ground(double beta_omega0, double gt, int d) {
  const double b = beta_omega0;
  double sum = 0.0;
  for (int p = 0; p <= d; ++p) {
    const double c = std::cos(gt * std::sqrt(static_cast<double>(p)));
    sum += std::exp(-b * p) * c * c;
  }
  return (1.0 - std::exp(-b)) * sum;
}

double population_rotated_gibbs(double beta_omega0, double kappa, double gt, int d) {
  const double b = beta_omega0;
  double sum = 0.0;
  for (int p = 0; p <= d; ++p)
    sum += std::exp(-b * p) * std::sin(2.0 * gt * std::sqrt(static_cast<double>(p)));
  return 1.0 / qubit_partition_function(b) -
         kappa * std::exp(b / 2) * (1.0 - std::exp(-b)) * sum;
}

}  // namespace coheng
