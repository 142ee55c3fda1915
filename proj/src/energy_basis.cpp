// SPDX-License-Identifier: Apache-2.0
#include "coheng/energy_basis.hpp"

#include <stdexcept>

namespace coheng {

EnergyBasis EnergyBasis::boson(int levels) {
  if (levels < 1) throw std::invalid_argument("boson basis needs at least one level");
  std::vector<int> labels(static_cast<size_t>(levels));
  for (int n = 0; n < levels; ++n) labels[static_cast<size_t>(n)] = 2 * n;
  return EnergyBasis(std::move(labels));
}

EnergyBasis EnergyBasis::qubits(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  EnergyBasis b = qubit();
  for (int k = 1; k < n; ++k) b = b.tensor(qubit());
  return b;
}

EnergyBasis EnergyBasis::tensor(const EnergyBasis& other) const {
  std::vector<int> labels;
  labels.reserve(labels_.size() * other.labels_.size());
  for (int la : labels_)
    for (int lb : other.labels_) labels.push_back(la + lb);
  return EnergyBasis(std::move(labels));
}

}  // namespace coheng
