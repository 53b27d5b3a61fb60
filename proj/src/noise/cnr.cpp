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

#include "qcs/noise/cnr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcs/noise/density.hpp"
#include "qcs/random.hpp"
#include "qcs/sim/statevector.hpp"

namespace qcs {

namespace {

void require_resolved(const CircuitGenome& genome) {
  for (const auto& g : genome.gates) {
    if (g.is_trainable() || g.is_embedding()) {
      throw std::invalid_argument("genome has unresolved parameter or feature slots");
    }
  }
}

}  // namespace

CircuitGenome snap_to_clifford(const CircuitGenome& genome, std::uint64_t seed) {
  Rng rng(seed);
  CircuitGenome out;
  out.n_qubits = genome.n_qubits;
  out.n_params = 0;
  out.gates.reserve(genome.gates.size());
  for (const auto& g : genome.gates) {
    if (is_rotation(g.kind())) {
      const double angle = static_cast<double>(uniform_index(rng, 4)) * (kPi / 2);
      out.gates.push_back(GateSpec::rotation(g.kind(), g.qubit(), FixedAngle{angle}));
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

OutcomeDistribution run_noiseless_dist(const CircuitGenome& fixed_genome) {
  require_resolved(fixed_genome);
  return run_circuit(fixed_genome, {}, {}).probabilities();
}

OutcomeDistribution run_noisy_dist(const CircuitGenome& fixed_genome, const DeviceModel& device) {
  require_resolved(fixed_genome);
  device.validate();
  if (fixed_genome.n_qubits > kMaxDensityQubits) {
    throw std::invalid_argument("noisy simulation limited to " + std::to_string(kMaxDensityQubits) +
                                " qubits");
  }
  if (fixed_genome.n_qubits != device.n_qubits) {
    throw std::invalid_argument("genome/device qubit count mismatch");
  }
  DensityState rho(fixed_genome.n_qubits);
  for (const auto& g : fixed_genome.gates) {
    rho.apply_gate(g, detail::resolve_angle(g, {}, {}));
    if (g.arity() == 1) {
      const int q = g.qubit(0);
      rho.depolarize(std::span<const int>(&q, 1), device.p1);
    } else {
      const int qs[2] = {g.qubit(0), g.qubit(1)};
      rho.depolarize(qs, device.p2);
    }
  }
  return apply_readout_flips(rho.probabilities(), fixed_genome.n_qubits, device.readout_flip);
}

double dist_fidelity(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("dist_fidelity: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += std::sqrt(std::max(0.0, p[i]) * std::max(0.0, q[i]));
  }
  return std::min(1.0, s * s);
}

double cnr(const CircuitGenome& genome, const DeviceModel& device, int n_replicas,
           std::uint64_t seed) {
  if (n_replicas < 1) throw std::invalid_argument("cnr needs at least one replica");
  double total = 0.0;
  for (int r = 0; r < n_replicas; ++r) {
    const auto replica = snap_to_clifford(genome, derive_seed(seed, static_cast<std::uint64_t>(r)));
    total += dist_fidelity(run_noiseless_dist(replica), run_noisy_dist(replica, device));
  }
  return total / n_replicas;
}

}  // namespace qcs
