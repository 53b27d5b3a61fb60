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

#include "qcs/data/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcs/common.hpp"

namespace qcs {

namespace {

void check_lengths(std::span<const double> a, std::span<const double> b, const char* who) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(who) + ": length mismatch");
  if (a.empty()) throw std::invalid_argument(std::string(who) + ": empty input");
}

}  // namespace

double average_precision(std::span<const double> scores, std::span<const double> labels) {
  check_lengths(scores, labels, "average_precision");
  const auto total_pos = std::count(labels.begin(), labels.end(), 1.0);
  if (total_pos == 0 || total_pos == static_cast<std::ptrdiff_t>(labels.size())) {
    throw std::invalid_argument("PR-AUC undefined: labels contain a single class");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double ap = 0.0;
  double tp = 0.0, seen = 0.0, prev_recall = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      tp += labels[order[j]] == 1.0;
      seen += 1.0;
      ++j;
    }
    const double recall = tp / static_cast<double>(total_pos);
    ap += (recall - prev_recall) * (tp / seen);
    prev_recall = recall;
    i = j;
  }
  return ap;
}

MetricReport classification_metrics(std::span<const double> scores, std::span<const double> labels) {
  check_lengths(scores, labels, "classification_metrics");
  for (const double y : labels) {
    if (y != 1.0 && y != -1.0) throw std::invalid_argument("labels must be -1 or +1");
  }
  MetricReport r;
  double sq = 0.0;
  int correct = 0, tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double e = scores[i] - labels[i];
    sq += e * e;
    const bool pred_pos = scores[i] >= 0.0;
    const bool is_pos = labels[i] == 1.0;
    correct += pred_pos == is_pos;
    tp += pred_pos && is_pos;
    fp += pred_pos && !is_pos;
    fn += !pred_pos && is_pos;
  }
  const auto n = static_cast<double>(scores.size());
  r.mse = sq / n;
  r.accuracy = correct / n;
  // F1 = 2TP / (2TP + FP + FN); zero when there are no true positives.
  r.f1 = tp == 0 ? 0.0 : 2.0 * tp / (2.0 * tp + fp + fn);
  r.pr_auc = average_precision(scores, labels);
  return r;
}

MetricReport regression_metrics(std::span<const double> preds, std::span<const double> targets) {
  check_lengths(preds, targets, "regression_metrics");
  MetricReport r;
  double sq = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) sq += (preds[i] - targets[i]) * (preds[i] - targets[i]);
  r.mse = sq / static_cast<double>(preds.size());
  const bool constant =
      std::adjacent_find(preds.begin(), preds.end(), std::not_equal_to<>()) == preds.end();
  // A constant predictor has no ranking; report rho = 0 rather than failing.
  r.spearman_r = (preds.size() < 3 || constant) ? 0.0 : spearman(preds, targets);
  return r;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j.
    const double mean_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mean_rank;
    i = j;
  }
  return ranks;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_lengths(xs, ys, "pearson");
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("correlation of a constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
  if (xs.size() < 3) throw std::invalid_argument("spearman: need at least 3 points");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

std::string_view to_string(MetricField f) {
  switch (f) {
    case MetricField::kMse:
      return "mse";
    case MetricField::kAccuracy:
      return "accuracy";
    case MetricField::kF1:
      return "f1";
    case MetricField::kPrAuc:
      return "pr_auc";
    case MetricField::kSpearmanR:
      return "spearman_r";
  }
  return "?";
}

std::optional<MetricField> metric_field_from_string(std::string_view name) {
  for (auto f : {MetricField::kMse, MetricField::kAccuracy, MetricField::kF1, MetricField::kPrAuc,
                 MetricField::kSpearmanR}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<double> metric_value(const MetricReport& r, MetricField f) {
  switch (f) {
    case MetricField::kMse:
      return r.mse;
    case MetricField::kAccuracy:
      return r.accuracy;
    case MetricField::kF1:
      return r.f1;
    case MetricField::kPrAuc:
      return r.pr_auc;
    case MetricField::kSpearmanR:
      return r.spearman_r;
  }
  return std::nullopt;
}

}  // namespace qcs
