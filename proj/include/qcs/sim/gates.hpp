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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qcs/common.hpp"

namespace qcs {

enum class GateKind { RX, RY, RZ, H, CX, CZ, S, X, Y, Z, I };

std::string_view to_string(GateKind kind);
/// Inverse of to_string; std::nullopt for unknown names.
std::optional<GateKind> gate_kind_from_string(std::string_view name);

constexpr bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}
constexpr bool is_two_qubit(GateKind k) { return k == GateKind::CX || k == GateKind::CZ; }

struct FixedAngle {
  double radians = 0.0;
  bool operator==(const FixedAngle&) const = default;
};
struct TrainableSlot {
  int slot = 0;
  bool operator==(const TrainableSlot&) const = default;
};
struct FeatureIndex {
  int index = 0;
  bool operator==(const FeatureIndex&) const = default;
};

/// Where a rotation's angle comes from. std::monostate for non-rotations.
using AngleSource = std::variant<std::monostate, FixedAngle, TrainableSlot, FeatureIndex>;

/// A single gate of a circuit. Construction enforces the arity and
/// angle-source invariants; qubit ranges are checked against a register later.
class GateSpec {
 public:
  static GateSpec rotation(GateKind kind, int qubit, AngleSource source);
  static GateSpec single(GateKind kind, int qubit);
  static GateSpec two_qubit(GateKind kind, int first, int second);

  GateKind kind() const { return kind_; }
  int arity() const { return is_two_qubit(kind_) ? 2 : 1; }
  int qubit(int i = 0) const { return qubits_[static_cast<std::size_t>(i)]; }
  const AngleSource& angle_source() const { return source_; }

  bool is_trainable() const { return std::holds_alternative<TrainableSlot>(source_); }
  bool is_embedding() const { return std::holds_alternative<FeatureIndex>(source_); }

  bool operator==(const GateSpec&) const = default;

 private:
  GateSpec(GateKind kind, std::array<int, 2> qubits, AngleSource source)
      : kind_(kind), qubits_(qubits), source_(source) {}

  GateKind kind_;
  std::array<int, 2> qubits_;
  AngleSource source_;
};

/// 2x2 complex matrix, row major.
using Mat2 = std::array<Complex, 4>;

/// Matrix of a single-qubit gate. Rotations require an angle, others reject one.
Mat2 single_qubit_matrix(GateKind kind, std::optional<double> angle = std::nullopt);

Mat2 adjoint(const Mat2& m);

}  // namespace qcs
