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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qcs/pipeline/pipeline.hpp"
#include "test_util.hpp"

namespace qcs {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  fs::path dir;
  std::string device = R"({"n_qubits": 4, "edges": [[0,1],[1,2],[2,3]], "p1": 0.002, "p2": 0.02, "readout_flip": 0.02})";
  std::string dataset = R"({"synthetic": {"task": "classification", "n_samples": 40, "n_features": 6, "imbalance_ratio": 3}})";
  std::string extra;

  explicit Fixture(const std::string& name) : dir(testing::scratch_dir(name)) {}

  RunConfig config(const RunOverrides& ov = {}) const {
    std::ofstream(dir / "device.json") << device;
    const std::string text = R"({"seed": 11, "device": "device.json", "dataset": )" + dataset +
                             R"(, "generator": {"n_candidates": 5, "gate_budget": 14},
                                 "scoring": {"subset_size": 10, "n_param_draws": 2, "n_replicas": 4},
                                 "train": {"epochs": 3, "batch_size": 8, "learning_rate": 0.05},
                                 "out": "run")" + extra + "}";
    return parse_run_config(text, dir, ov);
  }
};

TEST(RunConfig, DefaultsAndDerivedSeeds) {
  Fixture f("cfg_defaults");
  const auto c = f.config();
  EXPECT_EQ(c.out_dir, f.dir / "run");
  EXPECT_EQ(c.generator.n_features, 6);
  EXPECT_EQ(c.variants, (std::vector<ScoreVariant>{ScoreVariant::kEq1, ScoreVariant::kEq2Weighted}));
  EXPECT_EQ(c.rank_variant, ScoreVariant::kEq2Weighted);
  EXPECT_EQ(c.metric, MetricField::kPrAuc);
  EXPECT_EQ(c.scoring.alpha, 0.25);
  RunOverrides ov;
  ov.seed = 12;
  const auto other = f.config(ov);
  EXPECT_NE(other.generator.seed, c.generator.seed);
  EXPECT_NE(other.digest(), c.digest());
  EXPECT_EQ(f.config().digest(), c.digest());
}

TEST(RunConfig, MissingDeviceNamesPath) {
  Fixture f("cfg_missing_device");
  try {
    parse_run_config(R"({"device": "nope/dev.json", "dataset": {"synthetic": {}}})", f.dir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("nope/dev.json"), std::string::npos) << e.what();
  }
}

TEST(RunConfig, RejectsVariantForWrongTask) {
  Fixture f("cfg_wrong_variant");
  RunOverrides ov;
  ov.variant = ScoreVariant::kRegressionGaussian;
  EXPECT_THROW(f.config(ov), Error);
}

TEST(Pipeline, GenerateWritesGenomesAndStableManifest) {
  Fixture f("generate");
  Pipeline p(f.config());
  const auto manifest = p.generate();
  ASSERT_EQ(manifest.size(), 5u);
  for (const auto& e : manifest) EXPECT_TRUE(fs::exists(p.config().out_dir / e.file));
  const std::string first = slurp(p.manifest_path());
  EXPECT_NE(first.find("seed=11"), std::string::npos);
  EXPECT_NE(first.find(p.config().digest()), std::string::npos);
  p.generate();
  EXPECT_EQ(slurp(p.manifest_path()), first);
  EXPECT_EQ(read_manifest(p.manifest_path()).size(), 5u);
}

TEST(Pipeline, StagesNeedTheirInputs) {
  Fixture f("missing_inputs");
  Pipeline p(f.config());
  EXPECT_THROW(p.score(), StageError);
  try {
    p.train_eval();
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "train-eval");
  }
  p.generate();
  fs::remove(p.config().out_dir / "genomes" / "c0002.qcg");
  EXPECT_THROW(p.score(), StageError);
}

TEST(Pipeline, ZeroNoiseDeviceScoresCnrOne) {
  Fixture f("zero_noise");
  f.device = R"({"n_qubits": 4, "edges": [[0,1],[1,2],[2,3]]})";
  Pipeline p(f.config());
  p.generate();
  const auto scores = p.score();
  for (const auto& card : scores.at(ScoreVariant::kEq1)) EXPECT_NEAR(card.cnr, 1.0, 1e-9);
}

TEST(Pipeline, BalancedDataGivesIdenticalVariants) {
  Fixture f("balanced");
  f.dataset = R"({"synthetic": {"task": "classification", "n_samples": 40, "n_features": 6, "imbalance_ratio": 1}})";
  Pipeline p(f.config());
  p.generate();
  const auto scores = p.score();
  const auto& a = scores.at(ScoreVariant::kEq1);
  const auto& b = scores.at(ScoreVariant::kEq2Weighted);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i].final_score, b[i].final_score, 1e-12);
}

TEST(Pipeline, ScoreRerunIsIdenticalAndParallelSafe) {
  Fixture f("score_rerun");
  Pipeline p(f.config());
  p.generate();
  p.score();
  const std::string first = slurp(p.scores_path(ScoreVariant::kEq2Weighted));
  RunOverrides ov;
  ov.jobs = 3;
  Pipeline parallel(f.config(ov));
  parallel.score();
  EXPECT_EQ(slurp(p.scores_path(ScoreVariant::kEq2Weighted)), first);
  const auto cards = read_scorecards(p.scores_path(ScoreVariant::kEq2Weighted));
  ASSERT_EQ(cards.size(), 5u);
  EXPECT_EQ(cards[0].config_digest, p.config().scoring_digest());
}

TEST(Pipeline, TopKZeroGivesEmptyMetricTable) {
  Fixture f("top_k_zero");
  RunOverrides ov;
  ov.top_k = 0;
  Pipeline p(f.config(ov));
  EXPECT_NO_THROW(p.run_all());
  EXPECT_TRUE(read_metrics(p.metrics_path()).empty());
}

TEST(Pipeline, TopKTrainsBestCircuits) {
  Fixture f("top_k_two");
  RunOverrides ov;
  ov.top_k = 2;
  Pipeline p(f.config(ov));
  p.generate();
  auto cards = p.score().at(ScoreVariant::kEq2Weighted);
  std::stable_sort(cards.begin(), cards.end(),
                   [](const auto& a, const auto& b) { return a.final_score > b.final_score; });
  std::vector<int> want{cards[0].circuit_id, cards[1].circuit_id};
  std::sort(want.begin(), want.end());
  const auto rows = p.train_eval();
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].circuit_id, want[0]);
  EXPECT_EQ(rows[1].circuit_id, want[1]);
}

TEST(Pipeline, TrainEvalIsResumable) {
  Fixture f("resume");
  Pipeline p(f.config());
  p.generate();
  p.score();
  p.train_eval();
  const std::string first = slurp(p.metrics_path());
  const auto genome_time = fs::last_write_time(p.config().out_dir / "genomes" / "c0000.qcg");
  fs::remove(p.metrics_path());
  p.train_eval();
  EXPECT_EQ(slurp(p.metrics_path()), first);
  EXPECT_EQ(fs::last_write_time(p.config().out_dir / "genomes" / "c0000.qcg"), genome_time);
  for (const auto& r : read_metrics(p.metrics_path())) {
    EXPECT_EQ(r.status, "ok");
    EXPECT_TRUE(r.report.pr_auc.has_value());
  }
}

TEST(Pipeline, CorrelateEmitsOneRowAndPlotPerVariant) {
  Fixture f("correlate");
  Pipeline p(f.config());
  p.run_all();
  const auto rows = read_metrics(p.metrics_path());
  EXPECT_EQ(rows.size(), 5u);
  const fs::path out = p.config().out_dir;
  for (const char* v : {"eq1", "eq2_weighted"}) {
    EXPECT_TRUE(fs::exists(out / (std::string("scatter_") + v + ".csv")));
    EXPECT_TRUE(fs::exists(out / (std::string("scatter_") + v + ".svg")));
  }
  const std::string corr = slurp(p.correlation_path());
  EXPECT_NE(corr.find("eq1,pr_auc,5,"), std::string::npos);
  EXPECT_NE(corr.find("eq2_weighted,pr_auc,5,"), std::string::npos);
}

TEST(Pipeline, InjectedMonotoneMetricsCorrelatePerfectly) {
  Fixture f("monotone");
  Pipeline p(f.config());
  p.generate();
  p.score();
  auto cards = read_scorecards(p.scores_path(ScoreVariant::kEq1));
  std::string table = std::string("circuit_id,status,n_params,mse,accuracy,f1,pr_auc,spearman_r,final_train_loss\n");
  for (const auto& c : cards) {
    const double fake = 0.5 + 0.4 * c.final_score;
    table += std::to_string(c.circuit_id) + ",ok,1,0.1,0.5,0.5," + std::to_string(fake) + ",,0.1\n";
  }
  write_file_atomic(p.metrics_path(), table);
  const auto rows = p.correlate();
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[0].rho, 1.0, 1e-12);
}

TEST(Pipeline, FullRerunIsByteIdentical) {
  Fixture f("rerun");
  RunOverrides a, b;
  a.out_dir = f.dir / "a";
  b.out_dir = f.dir / "b";
  Pipeline(f.config(a)).run_all();
  b.jobs = 2;
  Pipeline(f.config(b)).run_all();
  int compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(f.dir / "a")) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), f.dir / "a");
    EXPECT_EQ(slurp(entry.path()), slurp(f.dir / "b" / rel)) << rel;
    if (entry.path().extension() == ".csv") {
      const std::string text = slurp(entry.path());
      EXPECT_NE(text.find("seed=11"), std::string::npos) << rel;
    }
    ++compared;
  }
  EXPECT_GT(compared, 10);
}

TEST(ParallelFor, CoversEveryIndexOnceAndPropagatesErrors) {
  std::vector<int> hits(50, 0);
  parallel_for(50, 4, [&](int i) { hits[static_cast<std::size_t>(i)] += 1; });
  EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 50);
  EXPECT_THROW(parallel_for(10, 3, [](int i) { if (i == 7) throw Error("boom"); }), Error);
}

}  // namespace
}  // namespace qcs
