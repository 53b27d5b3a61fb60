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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qcs/circuit/genome.hpp"
#include "qcs/common.hpp"
#include "qcs/random.hpp"
#include "qcs/sim/gates.hpp"

namespace qcs::testing {

using CMat = Eigen::MatrixXcd;

/// Random genome over every gate kind. Trainable gates take fresh slots, so
/// slots are always 0..n_params-1; embedding gates read features 0..n_features-1.
inline CircuitGenome random_genome(Rng& rng, int n_qubits, int n_gates, int n_features,
                                   bool allow_fixed = true) {
  static constexpr GateKind kSingles[] = {GateKind::H, GateKind::S, GateKind::X,
                                          GateKind::Y, GateKind::Z, GateKind::I};
  static constexpr GateKind kRotations[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
  CircuitGenome g;
  g.n_qubits = n_qubits;
  for (int i = 0; i < n_gates; ++i) {
    const int q = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n_qubits)));
    const auto pick = uniform_index(rng, n_qubits > 1 ? 6 : 5);
    const GateKind rot = kRotations[uniform_index(rng, 3)];
    if (pick == 0) {
      g.gates.push_back(GateSpec::rotation(rot, q, TrainableSlot{g.n_params++}));
    } else if (pick == 1 && n_features > 0) {
      g.gates.push_back(GateSpec::rotation(
          rot, q, FeatureIndex{static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n_features)))}));
    } else if (pick == 2 && allow_fixed) {
      g.gates.push_back(GateSpec::rotation(rot, q, FixedAngle{uniform(rng, -4.0, 4.0)}));
    } else if (pick == 5) {
      int t = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n_qubits - 1)));
      if (t >= q) ++t;
      g.gates.push_back(
          GateSpec::two_qubit(uniform_index(rng, 2) == 0 ? GateKind::CX : GateKind::CZ, q, t));
    } else {
      g.gates.push_back(GateSpec::single(kSingles[uniform_index(rng, 6)], q));
    }
  }
  return g;
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

// Textbook matrices, written out independently of the library.
inline CMat pauli(char which) {
  using C = std::complex<double>;
  CMat m(2, 2);
  switch (which) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline CMat oracle_1q(GateKind kind, double angle) {
  using C = std::complex<double>;
  const C i(0, 1);
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  CMat m(2, 2);
  switch (kind) {
    case GateKind::RX: return c * pauli('I') - i * s * pauli('X');
    case GateKind::RY: return c * pauli('I') - i * s * pauli('Y');
    case GateKind::RZ: return c * pauli('I') - i * s * pauli('Z');
    case GateKind::H: return (pauli('X') + pauli('Z')) / std::sqrt(2.0);
    case GateKind::S: m << 1, 0, 0, i; return m;
    case GateKind::X: return pauli('X');
    case GateKind::Y: return pauli('Y');
    case GateKind::Z: return pauli('Z');
    default: return pauli('I');
  }
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Full operator with `ops[q]` on qubit q; qubit 0 is the rightmost factor.
inline CMat embed(const std::vector<CMat>& ops) {
  CMat full = CMat::Identity(1, 1);
  for (int q = static_cast<int>(ops.size()) - 1; q >= 0; --q) full = kron(full, ops[static_cast<std::size_t>(q)]);
  return full;
}

inline CMat full_gate_matrix(const GateSpec& g, int n, double angle) {
  std::vector<CMat> ops(static_cast<std::size_t>(n), pauli('I'));
  if (g.arity() == 1) {
    ops[static_cast<std::size_t>(g.qubit(0))] = oracle_1q(g.kind(), angle);
    return embed(ops);
  }
  CMat p0(2, 2), p1(2, 2);
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  auto first = ops, second = ops;
  first[static_cast<std::size_t>(g.qubit(0))] = p0;
  second[static_cast<std::size_t>(g.qubit(0))] = p1;
  second[static_cast<std::size_t>(g.qubit(1))] = g.kind() == GateKind::CX ? pauli('X') : pauli('Z');
  return embed(first) + embed(second);
}

/// Circuit output from explicit 2^n x 2^n matrix products.
inline Eigen::VectorXcd oracle_run(const CircuitGenome& g, const std::vector<double>& params,
                                   const std::vector<double>& features) {
  const Eigen::Index dim = Eigen::Index{1} << g.n_qubits;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(0) = 1.0;
  for (const auto& gate : g.gates) {
    double angle = 0.0;
    const auto& src = gate.angle_source();
    if (const auto* f = std::get_if<FixedAngle>(&src)) angle = f->radians;
    if (const auto* t = std::get_if<TrainableSlot>(&src)) angle = params[static_cast<std::size_t>(t->slot)];
    if (const auto* e = std::get_if<FeatureIndex>(&src)) angle = features[static_cast<std::size_t>(e->index)] * kPi;
    psi = full_gate_matrix(gate, g.n_qubits, angle) * psi;
  }
  return psi;
}

/// Scratch directory unique to the calling test.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const char* env = std::getenv("QCS_TEST_TMP");
  std::filesystem::path base = env ? env : std::filesystem::temp_directory_path() / "qcs-tests";
  const auto dir = base / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace qcs::testing
