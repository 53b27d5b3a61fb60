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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcs {

/// Test-set metrics of one trained circuit. Classification fills mse,
/// accuracy, f1 and pr_auc; regression fills mse and spearman_r.
struct MetricReport {
  double mse = 0.0;
  std::optional<double> accuracy;
  std::optional<double> f1;
  std::optional<double> pr_auc;
  std::optional<double> spearman_r;
};

/// MSE on raw scores against +/-1 labels; accuracy and F1 with the rule
/// score >= 0 -> +1 (positive class +1); PR-AUC as tie-grouped average
/// precision. Throws when only one class is present.
MetricReport classification_metrics(std::span<const double> scores, std::span<const double> labels);

/// MSE and Spearman rho of predictions against targets.
MetricReport regression_metrics(std::span<const double> preds, std::span<const double> targets);

/// Average precision over a descending-score sweep where tied scores enter
/// together: sum over thresholds of (recall gain) * precision.
double average_precision(std::span<const double> scores, std::span<const double> labels);

/// 1-based ranks, tied values share the mean rank.
std::vector<double> average_ranks(std::span<const double> values);

double pearson(std::span<const double> xs, std::span<const double> ys);

/// Pearson correlation of average ranks. Needs >= 3 points and
/// non-constant inputs.
double spearman(std::span<const double> xs, std::span<const double> ys);

/// Field selector for correlation analysis.
enum class MetricField { kMse, kAccuracy, kF1, kPrAuc, kSpearmanR };

std::string_view to_string(MetricField f);
std::optional<MetricField> metric_field_from_string(std::string_view name);
std::optional<double> metric_value(const MetricReport& r, MetricField f);

}  // namespace qcs
