// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "coheng/jc_charging.hpp"
#include "coheng/operator_core.hpp"
#include "test_support.hpp"

using namespace coheng;
using test::max_abs_diff;

namespace {

DensityOperator plus_state() {
  ComplexMatrix m(2, 2);
  m.setConstant(0.5);
  return DensityOperator(std::move(m), EnergyBasis::qubit());
}

DensityOperator maximally_mixed_qubit() {
  return DensityOperator(0.5 * ComplexMatrix::Identity(2, 2), EnergyBasis::qubit());
}

}  // namespace

TEST_CASE("tensor product: scalar identity, diagonal products, pure products") {
  DensityOperator scalar(ComplexMatrix::Identity(1, 1), EnergyBasis(std::vector<int>{0}));
  const DensityOperator gamma = gibbs_qubit(1.0);
  CHECK(max_abs_diff(tensor_product(scalar, gamma).matrix(), gamma.matrix()) == 0.0);

  const double b = 0.7;
  const DensityOperator gg = tensor_product(gibbs_qubit(b), gibbs_qubit(b));
  const double zs2 = std::pow(qubit_partition_function(b), 2);
  const double expected[] = {1.0, std::exp(-b), std::exp(-b), std::exp(-2 * b)};
  for (int i = 0; i < 4; ++i)
    CHECK(gg.matrix()(i, i).real() == doctest::Approx(expected[i] / zs2).epsilon(1e-14));
  CHECK(gg.basis().labels() == std::vector<int>{-2, 0, 0, 2});

  const DensityOperator pp = tensor_product(plus_state(), plus_state());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(pp.matrix()(i, j) - Complex(0.25)) < 1e-15);
}

TEST_CASE("partial trace recovers factors and reduces entangled pairs") {
  std::mt19937_64 rng(7);
  const DensityOperator a(test::random_state(2, rng), EnergyBasis::qubit());
  const DensityOperator b(test::random_state(3, rng), EnergyBasis::boson(3));
  const DensityOperator ab = tensor_product(a, b);
  CHECK(max_abs_diff(partial_trace(ab, a.basis(), b.basis(), Subsystem::A).matrix(),
                     a.matrix()) < 1e-14);
  CHECK(max_abs_diff(partial_trace(ab, a.basis(), b.basis(), Subsystem::B).matrix(),
                     b.matrix()) < 1e-14);
  const double tr =
      partial_trace(ab, a.basis(), b.basis(), Subsystem::B).matrix().trace().real();
  CHECK(std::abs(tr - 1.0) < 1e-12);

  // (|0,1> + |1,0>)/sqrt(2) reduces to the maximally mixed qubit
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell(1) = 1.0 / std::sqrt(2.0);
  bell(2) = 1.0 / std::sqrt(2.0);
  const DensityOperator bell_state(ComplexMatrix(bell * bell.adjoint()),
                                   EnergyBasis::qubits(2));
  const DensityOperator reduced =
      partial_trace(bell_state, EnergyBasis::qubit(), EnergyBasis::qubit(), Subsystem::A);
  CHECK(max_abs_diff(reduced.matrix(), maximally_mixed_qubit().matrix()) < 1e-15);

  CHECK_THROWS_AS(partial_trace(ab, EnergyBasis::qubit(), EnergyBasis::qubit(), Subsystem::A),
                  std::invalid_argument);
}

TEST_CASE("hermitian eigensystem: diagonal, sigma_x, reconstruction") {
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 2.0;
  const Eigensystem d = hermitian_eigensystem(diag);
  CHECK(d.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(d.eigenvalues(1) == doctest::Approx(2.0));

  ComplexMatrix sx = ComplexMatrix::Zero(2, 2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const Eigensystem x = hermitian_eigensystem(sx);
  CHECK(x.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(x.eigenvalues(1) == doctest::Approx(1.0));

  std::mt19937_64 rng(11);
  const ComplexMatrix h = test::random_hermitian(8, rng);
  const Eigensystem e = hermitian_eigensystem(h);
  const ComplexMatrix rebuilt =
      e.eigenvectors * e.eigenvalues.asDiagonal() * e.eigenvectors.adjoint();
  CHECK(max_abs_diff(rebuilt, h) < 1e-10 * 8);
  CHECK(max_abs_diff(e.eigenvectors.adjoint() * e.eigenvectors,
                     ComplexMatrix::Identity(8, 8)) < 1e-12);

  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensystem(bad), std::invalid_argument);
}

TEST_CASE("2x2 eigenvalues match the characteristic polynomial") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix h = test::random_hermitian(2, rng);
    const double a = h(0, 0).real(), d = h(1, 1).real();
    const double off = std::abs(h(0, 1));
    const double mean = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    const Eigensystem e = hermitian_eigensystem(h);
    CHECK(std::abs(e.eigenvalues(0) - (mean - disc)) < 1e-12);
    CHECK(std::abs(e.eigenvalues(1) - (mean + disc)) < 1e-12);
  }
}

TEST_CASE("von Neumann entropy: pure states, mixed qubit, thermal qubit") {
  CHECK(von_neumann_entropy(plus_state()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(maximally_mixed_qubit()) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));

  // binary entropy of p1 = e^{-1} / (1 + e^{-1}), evaluated in closed form
  const double p1 = std::exp(-1.0) / (1.0 + std::exp(-1.0));
  const double expected = -p1 * std::log(p1) - (1.0 - p1) * std::log(1.0 - p1);
  CHECK(expected == doctest::Approx(0.5822031088882178).epsilon(1e-14));
  CHECK(von_neumann_entropy(gibbs_qubit(1.0)) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("entropy additivity under tensor products") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator a(test::random_state(3, rng), EnergyBasis::boson(3));
    const DensityOperator b(test::random_state(4, rng), EnergyBasis::boson(4));
    const double lhs = von_neumann_entropy(tensor_product(a, b));
    CHECK(std::abs(lhs - von_neumann_entropy(a) - von_neumann_entropy(b)) < 1e-9);
  }
}

TEST_CASE("relative entropy: zero on equal states, ln 2 benchmark, additivity") {
  std::mt19937_64 rng(23);
  const DensityOperator rho(test::random_state(4, rng), EnergyBasis::boson(4));
  CHECK(std::abs(relative_entropy(rho, rho)) < 1e-10);
  CHECK(relative_entropy(plus_state(), maximally_mixed_qubit()) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // additivity over tensor powers, N <= 4
  const DensityOperator sigma(test::random_state(2, rng), EnergyBasis::qubit());
  const DensityOperator tau(test::random_state(2, rng), EnergyBasis::qubit());
  const double single = relative_entropy(sigma, tau);
  for (int n = 2; n <= 4; ++n) {
    const double value = relative_entropy(tensor_power(sigma, n), tensor_power(tau, n));
    CHECK(std::abs(value - n * single) < 1e-8);
  }

  // support violation: pure vs orthogonal pure
  ComplexMatrix g = ComplexMatrix::Zero(2, 2);
  g(0, 0) = 1.0;
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(1, 1) = 1.0;
  CHECK_THROWS_AS(relative_entropy(DensityOperator(g, EnergyBasis::qubit()),
                                   DensityOperator(e, EnergyBasis::qubit())),
                  std::domain_error);
}

TEST_CASE("trace distance: coincidence, orthogonal states, bounds") {
  std::mt19937_64 rng(29);
  const DensityOperator rho(test::random_state(5, rng), EnergyBasis::boson(5));
  CHECK(trace_distance(rho, rho) == 0.0);

  ComplexMatrix g = ComplexMatrix::Zero(2, 2);
  g(0, 0) = 1.0;
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(1, 1) = 1.0;
  CHECK(trace_distance(DensityOperator(g, EnergyBasis::qubit()),
                       DensityOperator(e, EnergyBasis::qubit())) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const DensityOperator sigma(test::random_state(5, rng), EnergyBasis::boson(5));
  const double d = trace_distance(rho, sigma);
  CHECK(d >= 0.0);
  CHECK(d <= 1.0 + 1e-10);
}

TEST_CASE("density operator invariants are enforced") {
  ComplexMatrix non_hermitian(2, 2);
  non_hermitian << 0.5, 0.3, 0.1, 0.5;
  CHECK_THROWS_AS(DensityOperator(non_hermitian, EnergyBasis::qubit()),
                  std::invalid_argument);

  ComplexMatrix bad_trace = 0.7 * ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityOperator(bad_trace, EnergyBasis::qubit()), std::invalid_argument);

  ComplexMatrix not_psd(2, 2);
  not_psd << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityOperator(not_psd, EnergyBasis::qubit()).validate(),
                  std::invalid_argument);

  ComplexMatrix ok = 0.5 * ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityOperator(ok, EnergyBasis(std::vector<int>{0, 1, 2})),
                  std::invalid_argument);
}
