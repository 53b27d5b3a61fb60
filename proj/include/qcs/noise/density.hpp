// Copyright 2026 The qcsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qcs/common.hpp"
#include "qcs/sim/gates.hpp"
#include "qcs/sim/statevector.hpp"

namespace qcs {

inline constexpr int kMaxDensityQubits = 12;

/// Mixed state rho as a dense 2^n x 2^n matrix, row major. Uses the same
/// little-endian basis ordering as QuantumState.
class DensityState {
 public:
  /// |0...0><0...0|.
  explicit DensityState(int n_qubits);
  explicit DensityState(const QuantumState& pure);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  Complex operator()(std::size_t row, std::size_t col) const { return rho_[row * dim() + col]; }
  std::span<const Complex> data() const { return rho_; }

  /// rho -> U rho U^dagger for one gate with a resolved angle.
  void apply_gate(const GateSpec& gate, std::optional<double> angle = std::nullopt);

  /// rho -> (1 - p) rho + p (I/2^k (x) Tr_S rho) for the k = |qubits| subsystem S.
  /// p = 1 replaces S with the maximally mixed state.
  void depolarize(std::span<const int> qubits, double p);

  Complex trace() const;
  /// Largest |rho_ij - conj(rho_ji)|.
  double hermiticity_error() const;
  /// Diagonal of rho, clamped at zero for round-off.
  std::vector<double> probabilities() const;

 private:
  int n_qubits_;
  std::vector<Complex> rho_;
};

/// Independent per-qubit bit flips with probability `flip` applied to a
/// computational-basis distribution over n_qubits.
std::vector<double> apply_readout_flips(std::span<const double> probs, int n_qubits, double flip);

}  // namespace qcs
