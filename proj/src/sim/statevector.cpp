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

#include "qcs/sim/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcs/sim/kernels.hpp"

namespace qcs {

namespace {

void check_register(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxStatevectorQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) +
                                " outside [0, " + std::to_string(kMaxStatevectorQubits) + "]");
  }
}

void check_gate_qubits(const GateSpec& gate, int n_qubits) {
  for (int i = 0; i < gate.arity(); ++i) {
    if (gate.qubit(i) >= n_qubits) {
      throw std::out_of_range("qubit index " + std::to_string(gate.qubit(i)) +
                              " out of range for " + std::to_string(n_qubits) + " qubits");
    }
  }
}

}  // namespace

QuantumState::QuantumState(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

QuantumState::QuantumState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_register(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude vector length must be 2^n_qubits");
  }
  if (std::abs(norm_squared() - 1.0) > tol::kNorm) {
    throw std::invalid_argument("state is not normalised");
  }
}

double QuantumState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

std::vector<double> QuantumState::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

namespace detail {

std::optional<double> resolve_angle(const GateSpec& gate, std::span<const double> params,
                                    std::span<const double> features) {
  return std::visit(
      [&](const auto& src) -> std::optional<double> {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, FixedAngle>) {
          return src.radians;
        } else if constexpr (std::is_same_v<T, TrainableSlot>) {
          return params[static_cast<std::size_t>(src.slot)];
        } else if constexpr (std::is_same_v<T, FeatureIndex>) {
          return embedding_angle(features[static_cast<std::size_t>(src.index)]);
        } else {
          return std::nullopt;
        }
      },
      gate.angle_source());
}

void apply_in_place(std::span<Complex> amps, const GateSpec& gate, std::optional<double> angle) {
  switch (gate.kind()) {
    case GateKind::CX:
      kernels::apply_cx(amps, gate.qubit(0), gate.qubit(1));
      return;
    case GateKind::CZ:
      kernels::apply_cz(amps, gate.qubit(0), gate.qubit(1));
      return;
    case GateKind::I:
      return;
    default:
      kernels::apply_1q(amps, gate.qubit(0), single_qubit_matrix(gate.kind(), angle));
  }
}

void check_inputs(const CircuitGenome& genome, std::span<const double> params,
                  std::span<const double> features) {
  check_register(genome.n_qubits);
  for (const auto& g : genome.gates) {
    check_gate_qubits(g, genome.n_qubits);
    if (const auto* s = std::get_if<TrainableSlot>(&g.angle_source())) {
      if (static_cast<std::size_t>(s->slot) >= params.size()) {
        throw std::invalid_argument("missing parameter for slot " + std::to_string(s->slot));
      }
    } else if (const auto* f = std::get_if<FeatureIndex>(&g.angle_source())) {
      if (static_cast<std::size_t>(f->index) >= features.size()) {
        throw std::invalid_argument("missing feature index " + std::to_string(f->index));
      }
      const double v = features[static_cast<std::size_t>(f->index)];
      if (!(v >= -1.0 && v <= 1.0)) {
        throw std::invalid_argument("feature " + std::to_string(f->index) +
                                    " outside [-1, 1]: " + std::to_string(v));
      }
    }
  }
}

}  // namespace detail

QuantumState apply_gate(QuantumState state, const GateSpec& gate, std::optional<double> angle) {
  check_gate_qubits(gate, state.n_qubits());
  if (is_rotation(gate.kind()) != angle.has_value()) {
    throw std::invalid_argument(is_rotation(gate.kind()) ? "rotation gate requires an angle"
                                                         : "angle supplied to a non-rotation gate");
  }
  detail::apply_in_place(StateMutator::amplitudes(state), gate, angle);
  return state;
}

QuantumState run_circuit(const CircuitGenome& genome, std::span<const double> params,
                         std::span<const double> features) {
  detail::check_inputs(genome, params, features);
  QuantumState state(genome.n_qubits);
  auto amps = StateMutator::amplitudes(state);
  for (const auto& g : genome.gates) {
    detail::apply_in_place(amps, g, detail::resolve_angle(g, params, features));
  }
  return state;
}

double expectation_z(const QuantumState& state, std::span<const int> qubits) {
  if (qubits.empty()) throw std::invalid_argument("expectation_z needs at least one qubit");
  for (int q : qubits) {
    if (q < 0 || q >= state.n_qubits()) {
      throw std::out_of_range("measurement qubit " + std::to_string(q) + " out of range");
    }
  }
  const auto amps = state.amplitudes();
  double total = 0.0;
  for (int q : qubits) {
    const std::size_t mask = std::size_t{1} << q;
    double z = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      z += (i & mask) ? -std::norm(amps[i]) : std::norm(amps[i]);
    }
    total += z;
  }
  return total / static_cast<double>(qubits.size());
}

double state_fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  }
  // Accumulate in index order on both sides so the result is symmetric bit for bit:
  // conj(a_i) b_i and conj(b_i) a_i are complex conjugates with equal modulus.
  Complex overlap{};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
  return std::norm(overlap);
}

}  // namespace qcs
