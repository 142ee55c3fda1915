// SPDX-License-Identifier: Apache-2.0
#include "coheng/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "coheng/collective_tc.hpp"
#include "coheng/constants.hpp"
#include "coheng/engine_cycle.hpp"
#include "coheng/table.hpp"

namespace coheng {

namespace {

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Check upper_bound(std::string name, double observed, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.observed = observed;
  c.residual = observed;
  c.tolerance = tolerance;
  c.pass = observed <= tolerance;
  return c;
}

Check lower_bound(std::string name, double observed, double threshold) {
  Check c;
  c.name = std::move(name);
  c.observed = observed;
  c.residual = threshold - observed;
  c.tolerance = 0.0;
  c.pass = c.residual <= 0.0;
  return c;
}

void observations_suite(VerificationReport& report, std::uint64_t seed, double acc) {
  std::mt19937_64 rng(seed);
  double res_system = 0.0, res_bath = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double beta = 0.2 + 2.8 * uniform(rng);
    const double gt = 30.0 * uniform(rng);
    const BathSpec spec = BathSpec::make(beta, acc);
    const JcBranches branches(gibbs_qubit(beta).matrix(), spec, gt);
    const Eigen::Matrix2cd rho_s = branches.reduced_system();
    const double zs = qubit_partition_function(beta);
    res_system = std::max({res_system, std::abs(rho_s(0, 0).real() - 1.0 / zs),
                           std::abs(rho_s(1, 1).real() - std::exp(-beta) / zs)});
    const Eigen::VectorXd diag = branches.bath_diagonal();
    const double zt = truncated_bath_partition_function(beta, spec.dim);
    for (int n = 0; n < diag.size(); ++n) {
      const double gibbs = n < spec.dim ? std::exp(-beta * n) / zt : 0.0;
      res_bath = std::max(res_bath, std::abs(diag(n) - gibbs));
    }
  }
  report.checks.push_back(
      upper_bound("system_diagonal_invariance", res_system, 1e-8));
  report.checks.push_back(upper_bound("bath_diagonal_invariance", res_bath, 1e-8));

  for (int n : {2, 3}) {
    double worst_int = 0.0, worst_block = 0.0;
    for (int draw = 0; draw < 10; ++draw) {
      const double beta = 0.8 + 1.7 * uniform(rng);
      const double gt = 20.0 * uniform(rng);
      TCSpec spec;
      spec.n_qubits = n;
      spec.couplings = random_unit_couplings(n, rng());
      spec.bath = tc_default_bath(beta, n, acc);
      spec.gt = gt;
      const CollectiveChargingCheck result = collective_charging_check(spec);
      worst_int = std::max(worst_int, result.internal_coherence);
      worst_block = std::max(worst_block, result.block_residual);
    }
    const std::string tag = std::to_string(n);
    report.checks.push_back(
        upper_bound("collective_internal_coherence_n" + tag, worst_int, 1e-8));
    report.checks.push_back(
        upper_bound("collective_block_proportionality_n" + tag, worst_block, 1e-8));
  }

  // sequential charging must never fall behind the collective interaction
  double worst_gap = 0.0;
  for (const ChargingComparisonRow& row :
       sequential_vs_collective(2, 1.0, {0.0, 3.0, 7.0, 11.0, 15.0}, acc))
    worst_gap = std::max(worst_gap, row.c_int_collective - row.c_int_sequential);
  report.checks.push_back(
      upper_bound("sequential_vs_collective_activation", worst_gap, 1e-9));
}

void conservation_suite(VerificationReport& report, double acc) {
  double worst = 0.0;
  for (int bi = 0; bi < 10; ++bi)
    for (int gi = 0; gi < 10; ++gi) {
      const double beta = 0.2 + (3.0 - 0.2) * bi / 9.0;
      const double gt = 30.0 * gi / 9.0;
      worst = std::max(worst, conservation_check(beta, gt, acc));
    }
  report.checks.push_back(upper_bound("external_coherence_conservation_residual", worst, 1e-7));
}

void rates_suite(VerificationReport& report, double acc) {
  const std::pair<double, double> points[] = {{0.5, 2}, {0.5, 8}, {1, 1},  {1, 3},    {1, 5},
                                              {1, 12},  {1.5, 7}, {2, 4},  {2, 15},   {2.5, 20}};
  double worst_heat = 0.0, worst_identity = 0.0;
  for (const auto& [beta, gt] : points) {
    const RateReport r = rate_checks(beta, gt, 1e-4, acc);
    worst_heat = std::max(worst_heat, std::abs(r.heat_rate));
    const double scale =
        std::max({std::abs(r.entropy_production), std::abs(r.coherence_change_rate), 1e-12});
    worst_identity = std::max(
        worst_identity, std::abs(r.entropy_production + r.coherence_change_rate) / scale);
  }
  report.checks.push_back(upper_bound("zero_heat_flow", worst_heat, 1e-6));
  report.checks.push_back(
      upper_bound("entropy_production_matches_coherence_rate", worst_identity, 1e-3));
}

void truncation_suite(VerificationReport& report, double acc) {
  report.checks.push_back(upper_bound(
      "effective_dimension_beta1",
      std::abs(effective_bath_dimension(1.0, 1e-8) - 17), 0.0));
  report.checks.push_back(upper_bound(
      "effective_dimension_beta05",
      std::abs(effective_bath_dimension(0.5, 1e-8) - 35), 0.0));

  double worst = 0.0;
  for (double beta : {0.5, 1.0, 2.0})
    for (double gt : {1.0, 10.0, 30.0}) {
      const int dstar = effective_bath_dimension(beta, acc);
      const Complex lo = coherence_amplitude(beta, gt, dstar);
      const Complex hi = coherence_amplitude(beta, gt, dstar + 200);
      worst = std::max(worst, std::abs(lo - hi));
    }
  report.checks.push_back(upper_bound("series_truncation_error", worst, acc));

  // empirical remainder against the geometric bound
  const int dstar = effective_bath_dimension(1.0, acc);
  const double empirical =
      std::abs(coherence_amplitude(1.0, 10.0, dstar) - coherence_amplitude(1.0, 10.0, dstar + 200));
  report.checks.push_back(upper_bound("series_remainder_bound", empirical,
                                      series_remainder_bound(1.0, dstar, 10.0)));
}

void populations_suite(VerificationReport& report, double acc) {
  const double beta = 1.0, kappa = 0.3;
  const BathSpec spec = BathSpec::make(beta, acc);
  const double zs = qubit_partition_function(beta);

  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  ComplexMatrix rotated = ComplexMatrix::Zero(2, 2);
  rotated(0, 0) = 1.0 / zs;
  rotated(1, 1) = std::exp(-beta) / zs;
  rotated(0, 1) = Complex(0.0, kappa);
  rotated(1, 0) = Complex(0.0, -kappa);

  double err1 = 0.0, err2 = 0.0, dev1 = 0.0, dev2 = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double gt = 10.0 * i / 200.0;
    const double series1 = population_pure_ground(beta, gt, spec.dim);
    const double evolved1 = JcBranches(ground, spec, gt).reduced_system()(0, 0).real();
    err1 = std::max(err1, std::abs(series1 - evolved1));
    dev1 = std::max(dev1, std::abs(series1 - 1.0));

    const double series2 = population_rotated_gibbs(beta, kappa, gt, spec.dim);
    const double evolved2 = JcBranches(rotated, spec, gt).reduced_system()(0, 0).real();
    err2 = std::max(err2, std::abs(series2 - evolved2));
    dev2 = std::max(dev2, std::abs(series2 - 1.0 / zs));
  }
  report.checks.push_back(upper_bound("population_ground_series_vs_evolution", err1, 1e-8));
  report.checks.push_back(upper_bound("population_rotated_series_vs_evolution", err2, 1e-8));
  report.checks.push_back(lower_bound("population_ground_deviation_fires", dev1, 0.05));
  report.checks.push_back(lower_bound("population_rotated_deviation_fires", dev2, 0.05));
}

}  // namespace

VerificationReport run_suite(const std::string& suite, std::uint64_t seed, double acc) {
  VerificationReport report;
  report.suite = suite;
  report.seed = seed;
  report.acc = acc;
  if (suite == "observations" || suite == "all") observations_suite(report, seed, acc);
  if (suite == "conservation" || suite == "all") conservation_suite(report, acc);
  if (suite == "rates" || suite == "all") rates_suite(report, acc);
  if (suite == "truncation" || suite == "all") truncation_suite(report, acc);
  if (suite == "populations" || suite == "all") populations_suite(report, acc);
  if (report.checks.empty())
    throw std::invalid_argument("unknown verification suite: " + suite);
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const Check& c) { return c.pass; });
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["acc"] = report.acc;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["observed"] = c.observed;
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    j["checks"].push_back(jc);
  }
  j["passed"] = report.passed;
  return j.dump(2) + "\n";
}

}  // namespace coheng
