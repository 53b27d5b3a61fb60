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

#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qcs/data/correlation.hpp"
#include "qcs/pipeline/run_config.hpp"

namespace qcs {

/// Error raised by a pipeline stage; `stage` names it for the CLI.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct ManifestEntry {
  int circuit_id = 0;
  std::string file;  // relative to the output directory
  std::uint64_t seed = 0;
  std::string config_digest;
};

struct MetricRow {
  int circuit_id = 0;
  /// "ok" or "failed: <reason>".
  std::string status;
  int n_params = 0;
  MetricReport report;
  double final_train_loss = 0.0;
};

/// Runs the generate -> score -> train-eval -> correlate stages against an
/// output directory. Each stage reads its inputs from files written by the
/// previous one, so stages can be rerun independently.
class Pipeline {
 public:
  explicit Pipeline(RunConfig config, std::ostream* log = nullptr);

  const RunConfig& config() const { return config_; }

  std::vector<ManifestEntry> generate();
  std::map<ScoreVariant, std::vector<ScoreCard>> score();
  std::vector<MetricRow> train_eval();
  std::vector<CorrelationRow> correlate();
  void run_all();

  /// Dataset after preprocessing (remap / normalization) and validation.
  Dataset prepare_dataset() const;

  std::filesystem::path manifest_path() const;
  std::filesystem::path scores_path(ScoreVariant v) const;
  std::filesystem::path metrics_path() const;
  std::filesystem::path correlation_path() const;

 private:
  std::vector<CircuitGenome> load_genomes(const std::vector<ManifestEntry>& manifest) const;
  std::string header_line(const std::string& artifact) const;
  void log(const std::string& line) const;

  RunConfig config_;
  std::ostream* log_;
};

/// Per-circuit seed for stage `stream`, independent of scheduling order.
std::uint64_t circuit_seed(std::uint64_t global_seed, std::uint64_t stream, int circuit_id);

/// Calls fn(i) for i in [0, n) on `jobs` worker threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

// Artifact readers/writers. All tables start with a "# ..." provenance line.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
std::vector<ScoreCard> read_scorecards(const std::filesystem::path& path);
std::vector<MetricRow> read_metrics(const std::filesystem::path& path);
std::string scorecards_to_csv(const std::vector<ScoreCard>& cards);
/// Writes through a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qcs
