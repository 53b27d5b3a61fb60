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

// qcsearch command-line driver: generate, score, train-eval, correlate, pipeline.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcs/pipeline/pipeline.hpp"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  std::string variant;
  int top_k = -1;
  int jobs = 0;
  std::string metric;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "Run configuration (JSON)")->required();
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--seed", o.seed, "Global seed");
  cmd->add_option("--variant", o.variant,
                  "Scoring variant: eq1, eq2_weighted, regression_plain, regression_gaussian");
  cmd->add_option("--top-k", o.top_k, "Train only the k best-scoring circuits");
  cmd->add_option("--jobs", o.jobs, "Worker threads");
  cmd->add_option("--metric", o.metric, "Correlated metric: mse, accuracy, f1, pr_auc, spearman_r");
}

qcs::RunOverrides to_overrides(const CLI::App& cmd, const Options& o) {
  qcs::RunOverrides ov;
  if (!o.out.empty()) ov.out_dir = o.out;
  if (cmd.count("--seed")) ov.seed = o.seed;
  if (!o.variant.empty()) {
    ov.variant = qcs::score_variant_from_string(o.variant);
    if (!ov.variant) throw qcs::Error("unknown variant '" + o.variant + "'");
  }
  if (cmd.count("--top-k")) ov.top_k = o.top_k;
  if (cmd.count("--jobs")) ov.jobs = o.jobs;
  if (!o.metric.empty()) {
    ov.metric = qcs::metric_field_from_string(o.metric);
    if (!ov.metric) throw qcs::Error("unknown metric '" + o.metric + "'");
  }
  return ov;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcsearch: training-free scoring of hardware-aware variational circuits"};
  app.require_subcommand(1);
  Options opts;
  const char* names[] = {"generate", "score", "train-eval", "correlate", "pipeline"};
  const char* help[] = {"Generate candidate genomes and the manifest",
                        "Score every manifest circuit under the configured variants",
                        "Train and evaluate the selected circuits",
                        "Correlate scores with a test metric",
                        "Run all stages"};
  for (int i = 0; i < 5; ++i) add_common(app.add_subcommand(names[i], help[i]), opts);

  CLI11_PARSE(app, argc, argv);
  const CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();

  qcs::RunConfig config;
  try {
    config = qcs::load_run_config(opts.config, to_overrides(*cmd, opts));
  } catch (const std::exception& e) {
    std::cerr << "qcs " << name << ": config: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "qcs " << name << ": seed " << config.seed << ", config digest " << config.digest()
            << ", output " << config.out_dir.string() << "\n";

  try {
    qcs::Pipeline pipeline(config, &std::cerr);
    if (name == "generate") {
      pipeline.generate();
    } else if (name == "score") {
      pipeline.score();
    } else if (name == "train-eval") {
      pipeline.train_eval();
    } else if (name == "correlate") {
      pipeline.correlate();
    } else {
      pipeline.run_all();
    }
  } catch (const qcs::StageError& e) {
    std::cerr << "qcs " << name << ": stage " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qcs " << name << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
