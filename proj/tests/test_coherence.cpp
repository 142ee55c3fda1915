// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "coheng/coherence.hpp"
#include "coheng/jc_charging.hpp"
#include "test_support.hpp"

using namespace coheng;
using test::max_abs_diff;

namespace {

DensityOperator plus_state() {
  ComplexMatrix m(2, 2);
  m.setConstant(0.5);
  return DensityOperator(std::move(m), EnergyBasis::qubit());
}

DensityOperator random_labeled_state(int dim, std::mt19937_64& rng) {
  // labels drawn from a small range so degeneracies actually occur
  std::vector<int> labels(static_cast<size_t>(dim));
  for (int& l : labels) l = static_cast<int>(rng() % 3u);
  return DensityOperator(test::random_state(dim, rng), EnergyBasis(std::move(labels)));
}

}  // namespace

TEST_CASE("fully_dephase removes off-diagonals and is idempotent") {
  const DensityOperator dephased = fully_dephase(plus_state());
  CHECK(max_abs_diff(dephased.matrix(), 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);

  const DensityOperator gamma = gibbs_qubit(1.3);
  CHECK(max_abs_diff(fully_dephase(gamma).matrix(), gamma.matrix()) == 0.0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator rho = random_labeled_state(5, rng);
    const DensityOperator once = fully_dephase(rho);
    CHECK(max_abs_diff(fully_dephase(once).matrix(), once.matrix()) < 1e-12);
    CHECK(std::abs(once.matrix().trace().real() - 1.0) < 1e-12);
  }
}

TEST_CASE("block_dephase keeps degenerate blocks only") {
  // single qubit: no degeneracy, D == Delta
  std::mt19937_64 rng(6);
  const DensityOperator qubit(test::random_state(2, rng), EnergyBasis::qubit());
  CHECK(max_abs_diff(block_dephase(qubit).matrix(), fully_dephase(qubit).matrix()) == 0.0);

  // two qubits: the |01>,|10> block survives, the |00>,|11> coherence does not
  const DensityOperator pair(test::random_state(4, rng), EnergyBasis::qubits(2));
  const DensityOperator blocked = block_dephase(pair);
  CHECK(blocked.matrix()(1, 2) == pair.matrix()(1, 2));
  CHECK(blocked.matrix()(2, 1) == pair.matrix()(2, 1));
  CHECK(blocked.matrix()(0, 3) == Complex(0.0));
  CHECK(blocked.matrix()(0, 1) == Complex(0.0));

  const DensityOperator gg = tensor_power(gibbs_qubit(0.9), 2);
  CHECK(max_abs_diff(block_dephase(gg).matrix(), gg.matrix()) == 0.0);
}

TEST_CASE("dephasing maps commute and are idempotent") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator rho = random_labeled_state(6, rng);
    const DensityOperator d = block_dephase(rho);
    CHECK(max_abs_diff(block_dephase(d).matrix(), d.matrix()) < 1e-12);
    CHECK(max_abs_diff(fully_dephase(d).matrix(), fully_dephase(rho).matrix()) < 1e-12);
    CHECK(max_abs_diff(block_dephase(fully_dephase(rho)).matrix(),
                       fully_dephase(rho).matrix()) < 1e-12);
  }
}

TEST_CASE("coherence report: incoherent, charged, and two-copy benchmark values") {
  const CoherenceReport gamma = coherence_report(gibbs_qubit(1.0));
  CHECK(gamma.c_int == 0.0);
  CHECK(gamma.c_ext == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gamma.c_tot == doctest::Approx(0.0).epsilon(1e-12));

  // charged qubit at (1, 5): no degeneracy so everything is external
  const BathSpec spec = BathSpec::make(1.0, 1e-8);
  const ChargeResult charge = charged_qubit_state(1.0, 5.0, spec);
  const CoherenceReport charged = coherence_report(charge.rho_s);
  CHECK(charged.c_int == 0.0);
  CHECK(charged.c_ext > 0.01);
  // oracle: eigenvalues of the 2x2 series state
  const double zs = qubit_partition_function(1.0);
  const double mean = 0.5;
  const double disc = std::sqrt(std::pow(0.5 * (1.0 - std::exp(-1.0)) / zs, 2) +
                                std::norm(charge.delta) / (zs * zs));
  const double spectrum[] = {mean - disc, mean + disc};
  const double diag[] = {1.0 / zs, std::exp(-1.0) / zs};
  const double expected_ext =
      entropy_from_spectrum(diag) - entropy_from_spectrum(spectrum);
  CHECK(charged.c_ext == doctest::Approx(expected_ext).epsilon(1e-10));

  // charging leaves the classical distribution thermal
  CHECK(max_abs_diff(fully_dephase(charge.rho_s).matrix(), gibbs_qubit(1.0).matrix()) <
        1e-12);
  // total coherence equals the relative entropy to the thermal state
  CHECK(std::abs(relative_entropy(charge.rho_s, gibbs_qubit(1.0)) - charged.c_tot) < 1e-10);

  // two copies of the maximally coherent qubit at beta = 0
  const DensityOperator two = tensor_power(maximally_coherent_qubit(0.0), 2);
  const CoherenceReport pair = coherence_report(two);
  CHECK(pair.c_int == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK(pair.c_ext == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-12));
  CHECK(pair.c_tot == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("coherence decomposition: non-negative parts summing to the total") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityOperator rho = random_labeled_state(6, rng);
    const CoherenceReport report = coherence_report(rho);
    CHECK(report.c_int >= 0.0);
    CHECK(report.c_ext >= 0.0);
    CHECK(report.c_tot >= 0.0);
    CHECK(std::abs(report.c_tot - (report.c_int + report.c_ext)) < 1e-9);
  }
}

TEST_CASE("states with all-distinct labels carry no internal coherence") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho(test::random_state(5, rng), EnergyBasis::boson(5));
    CHECK(max_abs_diff(block_dephase(rho).matrix(), fully_dephase(rho).matrix()) == 0.0);
    CHECK(coherence_report(rho).c_int == 0.0);
  }
}

TEST_CASE("energy-diagonal unitaries leave all coherence measures invariant") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = random_labeled_state(5, rng);
    Eigen::VectorXcd phases(5);
    const double theta = 6.28 * test::uniform(rng);
    for (int i = 0; i < 5; ++i)
      phases(i) = std::exp(Complex(0.0, theta * rho.basis().label(i)));
    const ComplexMatrix rotated =
        phases.asDiagonal() * rho.matrix() * phases.conjugate().asDiagonal();
    const CoherenceReport before = coherence_report(rho);
    const CoherenceReport after =
        coherence_report(DensityOperator(rotated, rho.basis()));
    CHECK(std::abs(before.c_int - after.c_int) < 1e-9);
    CHECK(std::abs(before.c_ext - after.c_ext) < 1e-9);
    CHECK(std::abs(before.c_tot - after.c_tot) < 1e-9);
  }
}

TEST_CASE("correlated external coherence: uncorrelated states carry none") {
  // a product with an incoherent factor shares no cross coherence
  std::mt19937_64 rng(27);
  const DensityOperator s(test::random_state(2, rng), EnergyBasis::qubit());
  const DensityOperator diag_bath = fully_dephase(
      DensityOperator(test::random_state(4, rng), EnergyBasis::boson(4)));
  const double corr = correlated_external_coherence(tensor_product(s, diag_bath),
                                                    s.basis(), diag_bath.basis());
  CHECK(std::abs(corr) < 1e-9);

  // initial engine state: thermal qubit times pure coherent bath
  const BathSpec spec = BathSpec::make(1.0, 1e-8);
  const DensityOperator joint0 =
      tensor_product(gibbs_qubit(1.0), coherent_bath_state(spec));
  CHECK(std::abs(correlated_external_coherence(joint0, EnergyBasis::qubit(),
                                               EnergyBasis::boson(spec.dim))) < 1e-9);
}

TEST_CASE("correlated external coherence matches the bath/system coherence changes") {
  // after charging, the correlated part equals -dC_ext(S) - dC_ext(B)
  const double beta = 1.0, gt = 5.0;
  const BathSpec spec = BathSpec::make(beta, 1e-8);
  const EnergyBasis basis_s = EnergyBasis::qubit();
  const EnergyBasis basis_b = EnergyBasis::boson(spec.dim + 1);
  const DensityOperator joint = jc_joint_evolution(gibbs_qubit(beta), spec, gt);
  const double corr = correlated_external_coherence(joint, basis_s, basis_b);

  const DensityOperator rho_s = partial_trace(joint, basis_s, basis_b, Subsystem::A);
  const DensityOperator rho_b = partial_trace(joint, basis_s, basis_b, Subsystem::B);
  ComplexMatrix bath0 = ComplexMatrix::Zero(spec.dim + 1, spec.dim + 1);
  bath0.topLeftCorner(spec.dim, spec.dim) = coherent_bath_state(spec).matrix();
  const double c_ext_b0 = coherence_report(DensityOperator(bath0, basis_b)).c_ext;
  const double lhs = -coherence_report(rho_s).c_ext -
                     (coherence_report(rho_b).c_ext - c_ext_b0);
  CHECK(std::abs(corr - lhs) < 1e-8);
  CHECK(corr > 0.1);  // correlations genuinely form at this point
}
