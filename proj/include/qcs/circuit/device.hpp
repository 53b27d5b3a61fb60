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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qcs/sim/gates.hpp"

namespace qcs {

/// Device topology plus a depolarizing/readout noise abstraction.
struct DeviceModel {
  int n_qubits = 0;
  /// Unordered coupling pairs, stored with first < second.
  std::vector<std::pair<int, int>> edges;
  GateKind native_two_qubit = GateKind::CX;
  double p1 = 0.0;            // depolarizing probability after each 1-qubit gate
  double p2 = 0.0;            // two-qubit depolarizing probability after each 2-qubit gate
  double readout_flip = 0.0;  // per-qubit measurement bit-flip probability

  bool has_edge(int a, int b) const;
  /// All problems with the model; empty when valid.
  std::vector<std::string> violations() const;
  /// Throws qcs::Error listing the violations.
  void validate() const;

  /// Same topology with every error rate multiplied by `factor` (clamped to 1).
  DeviceModel scaled_noise(double factor) const;

  bool operator==(const DeviceModel&) const = default;
};

/// JSON document with keys n_qubits, edges, native_two_qubit, p1, p2, readout_flip.
DeviceModel parse_device_json(const std::string& text);
DeviceModel load_device(const std::filesystem::path& path);
std::string device_to_json(const DeviceModel& device);

/// Linear chain 0-1-...-(n-1).
DeviceModel line_device(int n_qubits, double p1 = 0.0, double p2 = 0.0, double readout_flip = 0.0);

}  // namespace qcs
