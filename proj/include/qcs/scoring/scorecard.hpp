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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/circuit/device.hpp"
#include "qcs/circuit/genome.hpp"
#include "qcs/data/dataset.hpp"
#include "qcs/noise/cnr.hpp"
#include "qcs/scoring/repcap.hpp"

namespace qcs {

enum class ScoreVariant { kEq1, kEq2Weighted, kRegressionPlain, kRegressionGaussian };

std::string_view to_string(ScoreVariant v);
std::optional<ScoreVariant> score_variant_from_string(std::string_view name);
TaskKind task_of(ScoreVariant v);

struct ScoringConfig {
  int subset_size = 32;
  int n_param_draws = kDefaultParamDraws;
  int n_replicas = kDefaultCliffordReplicas;
  double alpha = kDefaultAlpha;
  /// Fixed Gaussian bandwidth; median pairwise target distance when unset.
  std::optional<double> sigma;
  std::uint64_t subset_seed = 0;
};

/// Train-split rows used for scoring: stratified by class (proportional, at
/// least one row per present class) for classification, uniform for
/// regression. Sorted ascending.
std::vector<std::size_t> select_scoring_subset(const Dataset& ds, int subset_size,
                                               std::uint64_t seed);

/// Everything about the scoring subset that is shared between circuits.
struct ScoringContext {
  TaskKind task = TaskKind::kClassification;
  std::vector<std::size_t> rows;
  std::vector<std::vector<double>> samples;
  std::vector<double> targets;
  ReferenceMatrix reference;
  WeightMatrix weights;  // classification only
  double sigma = 0.0;    // regression only

  static ScoringContext build(const Dataset& ds, const ScoringConfig& config);
};

struct ScoreCard {
  int circuit_id = 0;
  double cnr = 0.0;
  double repcap = 0.0;
  double final_score = 0.0;
  std::string config_digest;
};

/// RepCap of an already computed similarity matrix under `variant`.
double repcap_for_variant(const SimilarityMatrix& r_c, const ScoringContext& ctx,
                          ScoreVariant variant);

/// Per-circuit scoring shared by all variants: CNR and the similarity matrix
/// are computed once.
struct CircuitScores {
  double cnr = 0.0;
  SimilarityMatrix similarity;
};

CircuitScores compute_circuit_scores(const CircuitGenome& genome, const DeviceModel& device,
                                     const ScoringContext& ctx, const ScoringConfig& config,
                                     std::uint64_t circuit_seed);

ScoreCard make_scorecard(int circuit_id, const CircuitScores& scores, const ScoringContext& ctx,
                         ScoreVariant variant, double alpha, std::string config_digest);

}  // namespace qcs
