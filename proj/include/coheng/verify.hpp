// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_VERIFY_HPP
#define COHENG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace coheng {

/// One verification check. For upper-bound checks `observed` must stay below
/// `tolerance`; lower-bound checks (a counterexample must fire, a deviation
/// must exceed a threshold) store residual = threshold - observed so that
/// pass is always residual <= tolerance.
struct Check {
  std::string name;
  double observed = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  double acc = 0.0;
  std::vector<Check> checks;
  bool passed = false;
};

/// Suites: observations, conservation, rates, truncation, populations, all.
VerificationReport run_suite(const std::string& suite, std::uint64_t seed, double acc);

std::string report_to_json(const VerificationReport& report);

}  // namespace coheng

#endif
