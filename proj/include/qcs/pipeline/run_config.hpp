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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qcs/circuit/device.hpp"
#include "qcs/circuit/generator.hpp"
#include "qcs/data/dataset.hpp"
#include "qcs/data/metrics.hpp"
#include "qcs/data/synthetic.hpp"
#include "qcs/scoring/scorecard.hpp"
#include "qcs/train/trainer.hpp"

namespace qcs {

/// Where the data comes from: a dataset file or a synthetic generator.
struct DataSource {
  TaskKind task = TaskKind::kClassification;
  std::optional<std::filesystem::path> path;
  std::optional<SyntheticSpec> synthetic;
};

/// Fully resolved run description. Every seed used by the pipeline derives
/// from `seed` unless the config pins it.
struct RunConfig {
  std::uint64_t seed = 0;
  /// Device file, or an inline device when `device_path` is empty.
  std::filesystem::path device_path;
  DeviceModel device;
  DataSource data;
  GeneratorConfig generator;
  ScoringConfig scoring;
  std::vector<ScoreVariant> variants;
  TrainConfig train;
  /// Circuits to train, best first by `rank_variant`; all when unset.
  std::optional<int> top_k;
  ScoreVariant rank_variant = ScoreVariant::kEq2Weighted;
  MetricField metric = MetricField::kPrAuc;
  std::filesystem::path out_dir;
  int jobs = 1;

  /// Canonical JSON of everything that influences results (not out_dir/jobs).
  std::string canonical_json() const;
  /// 16 hex digits of FNV-1a over canonical_json().
  std::string digest() const;
  /// Digest of the parts that determine scores (device, data, generator,
  /// scoring settings); stored in every ScoreCard row.
  std::string scoring_digest() const;
};

/// Command-line overrides applied while resolving a config.
struct RunOverrides {
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<ScoreVariant> variant;
  std::optional<int> top_k;
  std::optional<int> jobs;
  std::optional<MetricField> metric;
};

/// Parses a JSON run config. Relative paths resolve against `base_dir`.
/// Derived defaults (seeds, n_features, variants, metric) are filled in after
/// the overrides, so a --seed override re-derives every unpinned seed.
/// Throws qcs::Error naming the offending key or missing file.
RunConfig parse_run_config(const std::string& json_text, const std::filesystem::path& base_dir,
                           const RunOverrides& overrides = {});
RunConfig load_run_config(const std::filesystem::path& path, const RunOverrides& overrides = {});

std::string fnv1a_hex(std::string_view text);

}  // namespace qcs
