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

#include "qcs/scoring/scorecard.hpp"

#include <algorithm>
#include <cmath>

#include "qcs/common.hpp"
#include "qcs/random.hpp"

namespace qcs {

std::string_view to_string(ScoreVariant v) {
  switch (v) {
    case ScoreVariant::kEq1:
      return "eq1";
    case ScoreVariant::kEq2Weighted:
      return "eq2_weighted";
    case ScoreVariant::kRegressionPlain:
      return "regression_plain";
    case ScoreVariant::kRegressionGaussian:
      return "regression_gaussian";
  }
  return "?";
}

std::optional<ScoreVariant> score_variant_from_string(std::string_view name) {
  for (auto v : {ScoreVariant::kEq1, ScoreVariant::kEq2Weighted, ScoreVariant::kRegressionPlain,
                 ScoreVariant::kRegressionGaussian}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

TaskKind task_of(ScoreVariant v) {
  return v == ScoreVariant::kEq1 || v == ScoreVariant::kEq2Weighted ? TaskKind::kClassification
                                                                     : TaskKind::kRegression;
}

std::vector<std::size_t> select_scoring_subset(const Dataset& ds, int subset_size,
                                               std::uint64_t seed) {
  if (subset_size < 2) throw std::invalid_argument("scoring subset needs at least 2 rows");
  auto train = ds.rows(Split::kTrain);
  if (train.empty()) throw Error("scoring: dataset has no training rows");
  Rng rng(seed);
  const auto want = std::min<std::size_t>(static_cast<std::size_t>(subset_size), train.size());
  std::vector<std::size_t> chosen;
  if (ds.task == TaskKind::kRegression) {
    shuffle(std::span<std::size_t>(train), rng);
    chosen.assign(train.begin(), train.begin() + static_cast<std::ptrdiff_t>(want));
  } else {
    std::vector<std::size_t> pos, neg;
    for (auto r : train) (ds.targets[r] > 0 ? pos : neg).push_back(r);
    shuffle(std::span<std::size_t>(pos), rng);
    shuffle(std::span<std::size_t>(neg), rng);
    auto n_pos = static_cast<std::size_t>(
        std::lround(static_cast<double>(want) * static_cast<double>(pos.size()) /
                    static_cast<double>(train.size())));
    if (!neg.empty() && !pos.empty()) n_pos = std::clamp<std::size_t>(n_pos, 1, want - 1);
    n_pos = std::min(n_pos, pos.size());
    const std::size_t n_neg = std::min(want - n_pos, neg.size());
    chosen.assign(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(n_pos));
    chosen.insert(chosen.end(), neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(n_neg));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

ScoringContext ScoringContext::build(const Dataset& ds, const ScoringConfig& config) {
  ScoringContext ctx;
  ctx.task = ds.task;
  ctx.rows = select_scoring_subset(ds, config.subset_size, config.subset_seed);
  for (auto r : ctx.rows) {
    ctx.samples.push_back(ds.features[r]);
    ctx.targets.push_back(ds.targets[r]);
  }
  if (ds.task == TaskKind::kClassification) {
    ctx.reference = reference_classification(ctx.targets);
    ctx.weights = class_weight_matrix(ctx.targets);
  } else {
    ctx.sigma = config.sigma ? *config.sigma : median_sigma(ctx.targets);
    ctx.reference = reference_regression(ctx.targets, ctx.sigma);
  }
  return ctx;
}

double repcap_for_variant(const SimilarityMatrix& r_c, const ScoringContext& ctx,
                          ScoreVariant variant) {
  if (task_of(variant) != ctx.task) {
    throw Error("scoring variant " + std::string(to_string(variant)) + " does not apply to a " +
                std::string(to_string(ctx.task)) + " dataset");
  }
  const int d = static_cast<int>(ctx.rows.size());
  switch (variant) {
    case ScoreVariant::kEq1:
      return repcap_classification(r_c.entries, ctx.reference.entries,
                                   Eigen::MatrixXd::Ones(d, d), 2, d);
    case ScoreVariant::kEq2Weighted:
      return repcap_classification(r_c.entries, ctx.reference.entries, ctx.weights.entries, 2, d);
    case ScoreVariant::kRegressionPlain:
      return repcap_regression(r_c.entries, ctx.reference.entries, RegressionMode::kPlain, d);
    case ScoreVariant::kRegressionGaussian:
      return repcap_regression(r_c.entries, ctx.reference.entries,
                               RegressionMode::kGaussianWeighted, d);
  }
  throw std::logic_error("unhandled score variant");
}

CircuitScores compute_circuit_scores(const CircuitGenome& genome, const DeviceModel& device,
                                     const ScoringContext& ctx, const ScoringConfig& config,
                                     std::uint64_t circuit_seed) {
  CircuitScores s;
  s.cnr = cnr(genome, device, config.n_replicas, derive_seed(circuit_seed, 1));
  s.similarity = similarity_matrix(genome, ctx.samples, config.n_param_draws,
                                   derive_seed(circuit_seed, 2));
  return s;
}

ScoreCard make_scorecard(int circuit_id, const CircuitScores& scores, const ScoringContext& ctx,
                         ScoreVariant variant, double alpha, std::string config_digest) {
  ScoreCard card;
  card.circuit_id = circuit_id;
  card.cnr = scores.cnr;
  card.repcap = repcap_for_variant(scores.similarity, ctx, variant);
  card.final_score = final_score(card.cnr, card.repcap, alpha);
  card.config_digest = std::move(config_digest);
  return card;
}

}  // namespace qcs
