// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_ENERGY_BASIS_HPP
#define COHENG_ENERGY_BASIS_HPP

#include <vector>

namespace coheng {

/// Integer energy label per basis index, in units of omega0/2.
///
/// Qubits carry {-1, +1} (ground, excited), a bosonic level n carries 2n, and
/// composite labels add under the tensor product. Keeping labels exact
/// integers makes degeneracy grouping tolerance-free.
class EnergyBasis {
 public:
  EnergyBasis() = default;
  explicit EnergyBasis(std::vector<int> labels) : labels_(std::move(labels)) {}

  static EnergyBasis qubit() { return EnergyBasis({-1, +1}); }
  static EnergyBasis boson(int levels);
  static EnergyBasis qubits(int n);  // n-qubit tensor power

  /// Composite basis with this factor major: label(i*other.dim()+j) = l_i + m_j.
  EnergyBasis tensor(const EnergyBasis& other) const;

  int dim() const { return static_cast<int>(labels_.size()); }
  int label(int index) const { return labels_[static_cast<size_t>(index)]; }
  const std::vector<int>& labels() const { return labels_; }

  bool operator==(const EnergyBasis&) const = default;

 private:
  std::vector<int> labels_;
};

}  // namespace coheng

#endif
