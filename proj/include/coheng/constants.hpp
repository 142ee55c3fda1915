// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_CONSTANTS_HPP
#define COHENG_CONSTANTS_HPP

namespace coheng {

// Numerical tolerances shared across the library. Dimensions stay below a
// few thousand, so fixed absolute thresholds in double precision are adequate.
namespace tol {
inline constexpr double hermiticity = 1e-12;        // density operator inputs
inline constexpr double hermiticity_loose = 1e-10;  // eigensolver precondition
inline constexpr double trace_unit = 1e-10;
inline constexpr double positivity = -1e-10;  // smallest admissible eigenvalue
inline constexpr double eig_clamp = 1e-14;    // eigenvalues below this count as 0
inline constexpr double support = 1e-12;      // support inclusion in S(rho||sigma)
inline constexpr double report_clamp = 1e-9;  // negative coherence noise clamp
}  // namespace tol

inline constexpr double default_accuracy = 1e-8;  // bath truncation target
inline constexpr int default_bath_margin = 5;     // extra levels above d*
inline constexpr int default_max_qubits = 12;

/// Copy cap for N-qubit collective states. Defaults to 12; the environment
/// variable ENGINE_MAX_QUBITS overrides it (read once per process).
int max_qubits();

}  // namespace coheng

#endif
