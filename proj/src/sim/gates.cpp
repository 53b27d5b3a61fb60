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

#include "qcs/sim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qcs {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 11> kNames{{
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::H, "H"},
    {GateKind::CX, "CX"},
    {GateKind::CZ, "CZ"},
    {GateKind::S, "S"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::I, "I"},
}};

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

GateSpec GateSpec::rotation(GateKind kind, int qubit, AngleSource source) {
  if (!is_rotation(kind)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " is not a rotation gate");
  }
  if (std::holds_alternative<std::monostate>(source)) {
    throw std::invalid_argument("rotation gate requires an angle source");
  }
  if (qubit < 0) throw std::invalid_argument("negative qubit index");
  if (const auto* s = std::get_if<TrainableSlot>(&source); s && s->slot < 0) {
    throw std::invalid_argument("negative parameter slot");
  }
  if (const auto* f = std::get_if<FeatureIndex>(&source); f && f->index < 0) {
    throw std::invalid_argument("negative feature index");
  }
  return GateSpec(kind, {qubit, -1}, source);
}

GateSpec GateSpec::single(GateKind kind, int qubit) {
  if (is_rotation(kind) || is_two_qubit(kind)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " is not a fixed single-qubit gate");
  }
  if (qubit < 0) throw std::invalid_argument("negative qubit index");
  return GateSpec(kind, {qubit, -1}, std::monostate{});
}

GateSpec GateSpec::two_qubit(GateKind kind, int first, int second) {
  if (!is_two_qubit(kind)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " is not a two-qubit gate");
  }
  if (first < 0 || second < 0) throw std::invalid_argument("negative qubit index");
  if (first == second) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  }
  return GateSpec(kind, {first, second}, std::monostate{});
}

Mat2 single_qubit_matrix(GateKind kind, std::optional<double> angle) {
  if (is_two_qubit(kind)) throw std::invalid_argument("two-qubit gate has no 2x2 matrix");
  if (is_rotation(kind) != angle.has_value()) {
    throw std::invalid_argument(is_rotation(kind) ? "rotation gate requires an angle"
                                                  : "angle supplied to a non-rotation gate");
  }
  const Complex i1{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::RX: {
      const double c = std::cos(*angle / 2), s = std::sin(*angle / 2);
      return {c, -i1 * s, -i1 * s, c};
    }
    case GateKind::RY: {
      const double c = std::cos(*angle / 2), s = std::sin(*angle / 2);
      return {c, -s, s, c};
    }
    case GateKind::RZ:
      return {std::polar(1.0, -*angle / 2), 0.0, 0.0, std::polar(1.0, *angle / 2)};
    case GateKind::H:
      return {r, r, r, -r};
    case GateKind::S:
      return {1.0, 0.0, 0.0, i1};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
      return {0.0, -i1, i1, 0.0};
    case GateKind::Z:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::I:
      return {1.0, 0.0, 0.0, 1.0};
    default:
      break;
  }
  throw std::logic_error("unhandled gate kind");
}

Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

}  // namespace qcs
