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

#include <map>
#include <string>
#include <vector>

#include "qcs/data/metrics.hpp"
#include "qcs/scoring/scorecard.hpp"

namespace qcs {

struct ScorePoint {
  int circuit_id = 0;
  double score = 0.0;
  double metric = 0.0;
};

struct CorrelationRow {
  std::string variant;
  MetricField metric = MetricField::kMse;
  int n_circuits = 0;
  double rho = 0.0;
  std::vector<ScorePoint> points;  // ordered by circuit id
};

/// Spearman rho between final_score and the selected metric for every
/// variant, over circuits present in both tables. Throws when a variant shares
/// fewer than 3 circuits with the metric table.
std::vector<CorrelationRow> correlation_report(
    const std::map<std::string, std::vector<ScoreCard>>& scorecards_by_variant,
    const std::map<int, MetricReport>& metrics_by_circuit, MetricField metric);

/// "circuit_id,score,metric" rows.
std::string scatter_csv(const CorrelationRow& row);
/// Standalone SVG scatter plot of score against metric.
std::string scatter_svg(const CorrelationRow& row);

}  // namespace qcs
