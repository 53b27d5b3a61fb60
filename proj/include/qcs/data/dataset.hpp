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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcs {

enum class TaskKind { kClassification, kRegression };
enum class Split { kTrain, kTest };

std::string_view to_string(TaskKind kind);
std::optional<TaskKind> task_kind_from_string(std::string_view name);
std::string_view to_string(Split split);

inline constexpr int kDefaultMaxFeatures = 128;

/// Row-oriented table of feature vectors with labels (+/-1) or continuous
/// targets and a split tag per row.
struct Dataset {
  TaskKind task = TaskKind::kClassification;
  int n_features = 0;
  std::vector<std::vector<double>> features;
  /// Class label (+/-1) or regression target per row.
  std::vector<double> targets;
  std::vector<Split> splits;

  std::size_t size() const { return targets.size(); }
  std::vector<std::size_t> rows(Split split) const;
  /// New dataset holding `row_ids` in the given order.
  Dataset select(std::span<const std::size_t> row_ids) const;
  Dataset select(Split split) const;

  bool operator==(const Dataset&) const = default;
};

/// Problems with `ds` as model input: shape, features in [-1,1], labels in
/// {-1,+1} or targets in [-1,1]. Empty means valid.
std::vector<std::string> validate_dataset(const Dataset& ds);

/// Parses the delimited format `split,label,f0,...,f{F-1}` (header row
/// required, split is train or test). No range checks; see load_dataset.
Dataset parse_dataset_csv(std::string_view text, TaskKind task);
Dataset read_dataset_file(const std::filesystem::path& path, TaskKind task);
/// read_dataset_file followed by validate_dataset; throws qcs::Error on the
/// first violation.
Dataset load_dataset(const std::filesystem::path& path, TaskKind task);

std::string dataset_to_csv(const Dataset& ds);
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

/// Labels 0 -> -1, 1 -> +1; feature bits 0 -> -1, 1 -> +1; keeps the first
/// `max_features` columns. Inputs must be binary.
Dataset preprocess_classification(const Dataset& raw, int max_features = kDefaultMaxFeatures);

/// Regression counterpart: keeps the first `max_features` columns and maps
/// them 0 -> -1, 1 -> +1 when every feature value is a bit; targets are left
/// raw (see normalize_dataset_targets).
Dataset preprocess_regression(const Dataset& raw, int max_features = kDefaultMaxFeatures);

/// Affine map fitted on the training targets: min -> -1, max -> +1.
struct TargetScaler {
  double min = 0.0;
  double max = 1.0;

  double forward(double y) const { return 2.0 * (y - min) / (max - min) - 1.0; }
  double inverse(double z) const { return min + (z + 1.0) * (max - min) / 2.0; }
};

struct NormalizedTargets {
  std::vector<double> train;
  std::vector<double> test;
  TargetScaler scaler;
  /// Test rows that fell outside [-1,1] and were clamped.
  int clamped = 0;
};

NormalizedTargets normalize_targets(std::span<const double> train, std::span<const double> test);

/// Normalizes a regression dataset in place using its own train split;
/// returns the fitted scaler and clamp count.
NormalizedTargets normalize_dataset_targets(Dataset& ds);

}  // namespace qcs
