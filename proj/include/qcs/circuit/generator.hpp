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

#include <cstdint>
#include <string>
#include <vector>

#include "qcs/circuit/device.hpp"
#include "qcs/circuit/genome.hpp"

namespace qcs {

struct GeneratorConfig {
  int n_candidates = 250;
  int gate_budget = 160;
  /// Mixture weights over gate categories; must sum to 1.
  double embed_fraction = 0.80;
  double trainable_fraction = 0.15;
  double entangle_fraction = 0.05;
  /// Number of input features F; embedding gates cycle through 0..F-1.
  int n_features = 128;
  std::uint64_t seed = 0;

  std::vector<std::string> violations() const;
};

/// Random hardware-aware candidates. Each gate draws a category from the
/// mixture: embedding gates get a uniform axis and qubit with feature indices
/// assigned round-robin over a seeded permutation of 0..F-1; trainable gates
/// get a uniform axis and qubit and a fresh parameter slot; entanglers are the
/// device-native two-qubit gate on a uniform coupling edge with uniform
/// orientation. When gate_budget * embed_fraction >= F the category draw is
/// repeated until at least F embedding gates appear, so every feature is used.
///
/// Candidate i is drawn from its own stream derived from (seed, i), so the
/// list is deterministic for a given (device, config).
std::vector<CircuitGenome> generate_candidates(const DeviceModel& device,
                                               const GeneratorConfig& config);

}  // namespace qcs
