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

#include "qcs/circuit/generator.hpp"

#include <cmath>
#include <numeric>

#include "qcs/common.hpp"
#include "qcs/random.hpp"

namespace qcs {

std::vector<std::string> GeneratorConfig::violations() const {
  std::vector<std::string> out;
  if (n_candidates < 0) out.push_back("n_candidates must be non-negative");
  if (gate_budget < 1) out.push_back("gate_budget must be at least 1");
  if (n_features < 1) out.push_back("n_features must be at least 1");
  if (embed_fraction < 0 || trainable_fraction < 0 || entangle_fraction < 0) {
    out.push_back("mixture fractions must be non-negative");
  }
  if (std::abs(embed_fraction + trainable_fraction + entangle_fraction - 1.0) > 1e-9) {
    out.push_back("mixture fractions must sum to 1");
  }
  return out;
}

namespace {

enum class Category { kEmbed, kTrainable, kEntangle };

constexpr int kMaxCategoryRedraws = 10000;

std::vector<Category> draw_categories(const GeneratorConfig& cfg, Rng& rng) {
  const bool need_coverage =
      static_cast<double>(cfg.gate_budget) * cfg.embed_fraction >= cfg.n_features - 1e-9;
  std::vector<Category> cats(static_cast<std::size_t>(cfg.gate_budget));
  for (int attempt = 0; attempt < kMaxCategoryRedraws; ++attempt) {
    int n_embed = 0;
    for (auto& c : cats) {
      const double u = uniform01(rng);
      if (u < cfg.embed_fraction) {
        c = Category::kEmbed;
      } else if (u < cfg.embed_fraction + cfg.trainable_fraction) {
        c = Category::kTrainable;
      } else if (cfg.entangle_fraction > 0.0) {
        c = Category::kEntangle;
      } else {
        // Rounding slack when the fractions sum to 1 - eps.
        c = cfg.trainable_fraction > 0.0 ? Category::kTrainable : Category::kEmbed;
      }
      n_embed += c == Category::kEmbed;
    }
    if (!need_coverage || n_embed >= cfg.n_features) return cats;
  }
  throw Error("generator: could not draw enough embedding gates for feature coverage");
}

GateKind random_axis(Rng& rng) {
  constexpr GateKind kAxes[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
  return kAxes[uniform_index(rng, 3)];
}

CircuitGenome generate_one(const DeviceModel& device, const GeneratorConfig& cfg, Rng& rng) {
  CircuitGenome g;
  g.n_qubits = device.n_qubits;
  const auto cats = draw_categories(cfg, rng);

  std::vector<int> perm(static_cast<std::size_t>(cfg.n_features));
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(std::span<int>(perm), rng);

  const auto nq = static_cast<std::uint64_t>(device.n_qubits);
  std::size_t next_feature = 0;
  for (const auto c : cats) {
    switch (c) {
      case Category::kEmbed: {
        const auto axis = random_axis(rng);
        const int q = static_cast<int>(uniform_index(rng, nq));
        g.gates.push_back(GateSpec::rotation(axis, q, FeatureIndex{perm[next_feature % perm.size()]}));
        ++next_feature;
        break;
      }
      case Category::kTrainable: {
        const auto axis = random_axis(rng);
        const int q = static_cast<int>(uniform_index(rng, nq));
        g.gates.push_back(GateSpec::rotation(axis, q, TrainableSlot{g.n_params++}));
        break;
      }
      case Category::kEntangle: {
        auto [a, b] = device.edges[uniform_index(rng, device.edges.size())];
        if (uniform_index(rng, 2) == 1) std::swap(a, b);
        g.gates.push_back(GateSpec::two_qubit(device.native_two_qubit, a, b));
        break;
      }
    }
  }
  return g;
}

}  // namespace

std::vector<CircuitGenome> generate_candidates(const DeviceModel& device,
                                               const GeneratorConfig& config) {
  device.validate();
  if (const auto v = config.violations(); !v.empty()) {
    throw Error("invalid generator config: " + v.front());
  }
  if (config.entangle_fraction > 0.0 && device.edges.empty()) {
    throw Error("generator: entangle_fraction > 0 but the device has no coupling edges");
  }
  std::vector<CircuitGenome> out;
  out.reserve(static_cast<std::size_t>(config.n_candidates));
  for (int i = 0; i < config.n_candidates; ++i) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(i)));
    out.push_back(generate_one(device, config, rng));
  }
  return out;
}

}  // namespace qcs
