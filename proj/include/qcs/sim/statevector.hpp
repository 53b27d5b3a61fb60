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

#include "qcs/circuit/genome.hpp"
#include "qcs/common.hpp"
#include "qcs/sim/gates.hpp"

namespace qcs {

inline constexpr int kMaxStatevectorQubits = 16;

/// Dense pure state over n qubits. Basis index bit q is qubit q, so qubit 0 is
/// the least significant bit.
class QuantumState {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit QuantumState(int n_qubits);
  /// Takes ownership of `amplitudes`; checks length 2^n and unit norm.
  QuantumState(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm_squared() const;

  /// Computational-basis probabilities |a_i|^2.
  std::vector<double> probabilities() const;

  bool operator==(const QuantumState&) const = default;

 private:
  friend class StateMutator;
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Applies one gate. `angle` must be given for rotations and only for them.
QuantumState apply_gate(QuantumState state, const GateSpec& gate,
                        std::optional<double> angle = std::nullopt);

/// Embedding rotations use angle = feature * pi.
constexpr double embedding_angle(double feature) { return feature * kPi; }

/// Runs `genome` from |0...0>. Trainable gates read params[slot]; embedding
/// gates read features[index], which must lie in [-1, 1].
QuantumState run_circuit(const CircuitGenome& genome, std::span<const double> params,
                         std::span<const double> features);

/// Mean of <Z_q> over `qubits`.
double expectation_z(const QuantumState& state, std::span<const int> qubits);

/// |<a|b>|^2.
double state_fidelity(const QuantumState& a, const QuantumState& b);

namespace detail {

/// Resolved angle of `gate` for the given inputs (nullopt for non-rotations).
std::optional<double> resolve_angle(const GateSpec& gate, std::span<const double> params,
                                    std::span<const double> features);
/// Applies a gate in place on raw amplitudes with a resolved angle.
void apply_in_place(std::span<Complex> amps, const GateSpec& gate, std::optional<double> angle);
/// Checks params/features cover every slot/index used by `genome`.
void check_inputs(const CircuitGenome& genome, std::span<const double> params,
                  std::span<const double> features);

}  // namespace detail

/// Escape hatch for simulators that evolve a state gate by gate.
class StateMutator {
 public:
  static std::span<Complex> amplitudes(QuantumState& s) { return s.amplitudes_; }
};

}  // namespace qcs
