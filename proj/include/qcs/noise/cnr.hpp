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
#include <span>
#include <vector>

#include "qcs/circuit/device.hpp"
#include "qcs/circuit/genome.hpp"

namespace qcs {

inline constexpr int kDefaultCliffordReplicas = 32;

/// Computational-basis outcome probabilities.
using OutcomeDistribution = std::vector<double>;

/// Replaces every rotation angle (trainable, embedding or fixed) with one drawn
/// uniformly from {0, pi/2, pi, 3pi/2}. The result has no parameter slots and
/// no embedding gates.
CircuitGenome snap_to_clifford(const CircuitGenome& genome, std::uint64_t seed);

/// Exact probabilities of a genome without parameter or feature slots.
OutcomeDistribution run_noiseless_dist(const CircuitGenome& fixed_genome);

/// Density-matrix run: depolarizing(p1) after every 1-qubit gate, two-qubit
/// depolarizing(p2) after every 2-qubit gate, then independent readout flips.
OutcomeDistribution run_noisy_dist(const CircuitGenome& fixed_genome, const DeviceModel& device);

/// Classical (Bhattacharyya) fidelity (sum_i sqrt(p_i q_i))^2.
double dist_fidelity(std::span<const double> p, std::span<const double> q);

/// Clifford noise resilience: mean fidelity between noiseless and noisy
/// output distributions of `n_replicas` Clifford replicas. Replica r is
/// snapped with seed derive_seed(seed, r).
double cnr(const CircuitGenome& genome, const DeviceModel& device,
           int n_replicas = kDefaultCliffordReplicas, std::uint64_t seed = 0);

}  // namespace qcs
