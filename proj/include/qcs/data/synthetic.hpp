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

#include "qcs/data/dataset.hpp"

namespace qcs {

struct SyntheticSpec {
  TaskKind task = TaskKind::kClassification;
  int n_samples = 210;
  int n_features = 16;
  /// Positives per negative (classification only).
  double imbalance_ratio = 6.0;
  /// 0 gives well separated classes / noise-free targets; 1 makes the
  /// classes identical.
  double noise_level = 0.0;
  double test_fraction = 0.3;
  std::uint64_t seed = 0;
};

/// Within-class half width of the uniform jitter around each class centre.
inline constexpr double kSyntheticJitter = 0.15;
/// Per-feature gap between class centres at noise_level 0.
inline constexpr double kSyntheticGap = 0.6;

/// Desk-scale stand-in for a real task.
///
/// Classification: a shared centre c ~ U[-0.45, 0.45]^F and a sign pattern s
/// define class centres c +/- s * gap / 2 with gap = (1 - noise_level) * 0.6;
/// rows add U[-0.15, 0.15] jitter per feature. Positives and negatives come
/// in the requested ratio, and the test split is stratified.
///
/// Regression: x ~ U[-1,1]^F, y = tanh(u1) + 0.5 sin(pi u2 / 2) with u1, u2
/// projections on two random unit directions scaled to unit variance, plus
/// noise_level * 0.25 * N(0,1); targets are min-max scaled to [-1, 1].
Dataset make_synthetic(const SyntheticSpec& spec);

}  // namespace qcs
