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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/sim/gates.hpp"

namespace qcs {

struct DeviceModel;

/// Ordered gate list over a fixed register: the unit the search operates on.
struct CircuitGenome {
  int n_qubits = 0;
  std::vector<GateSpec> gates;
  /// Trainable slots are 0..n_params-1.
  int n_params = 0;

  /// Embedding indices referenced by the gates.
  std::set<int> feature_indices() const;
  /// One past the largest feature index, 0 when there are no embedding gates.
  int feature_span() const;
  int count_two_qubit() const;
  int count_trainable() const;

  bool operator==(const CircuitGenome&) const = default;
};

/// Every problem found in `genome`, in gate order. Empty means valid.
/// Checks qubit ranges, two-qubit gates against the device coupling edges,
/// and that trainable slots are exactly 0..n_params-1.
std::vector<std::string> validate_genome(const CircuitGenome& genome, const DeviceModel& device);
/// Register-only checks (no device): qubit ranges and slot coverage.
std::vector<std::string> validate_genome(const CircuitGenome& genome);

inline constexpr int kGenomeFormatVersion = 1;

/// Line-oriented text record:
///
///   qcs-genome 1
///   n_qubits 7
///   n_params 2
///   RX q0 param 0
///   CX q0 q1
///   RY q2 feat 17
///   RZ q1 fixed 1.5707963267948966
///   H q3
///
/// Lines starting with '#' are comments. `comments` are written after the
/// header and ignored on load.
std::string save_genome(const CircuitGenome& genome, const std::vector<std::string>& comments = {});
/// Throws ParseError with the offending line on malformed input.
CircuitGenome load_genome(std::string_view text);

}  // namespace qcs
