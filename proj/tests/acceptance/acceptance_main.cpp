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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Optional arguments restrict the run to named checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../test_util.hpp"
#include "qcs/circuit/device.hpp"
#include "qcs/circuit/generator.hpp"
#include "qcs/data/metrics.hpp"
#include "qcs/data/synthetic.hpp"
#include "qcs/noise/cnr.hpp"
#include "qcs/pipeline/pipeline.hpp"
#include "qcs/scoring/repcap.hpp"
#include "qcs/scoring/scorecard.hpp"
#include "qcs/sim/statevector.hpp"
#include "qcs/train/trainer.hpp"

namespace qcs {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

fs::path work_root() {
  const char* env = std::getenv("QCS_TEST_TMP");
  return fs::path(env ? env : fs::temp_directory_path().string()) / "acceptance";
}

// ---------------------------------------------------------------------------

CircuitGenome inverse_of(const CircuitGenome& g, const std::vector<double>& params,
                         const std::vector<double>& features) {
  CircuitGenome inv{g.n_qubits, {}, 0};
  for (auto it = g.gates.rbegin(); it != g.gates.rend(); ++it) {
    const auto angle = detail::resolve_angle(*it, params, features);
    if (angle) {
      inv.gates.push_back(GateSpec::rotation(it->kind(), it->qubit(), FixedAngle{-*angle}));
    } else if (it->kind() == GateKind::S) {
      for (int k = 0; k < 3; ++k) inv.gates.push_back(GateSpec::single(GateKind::S, it->qubit()));
    } else if (it->arity() == 2) {
      inv.gates.push_back(GateSpec::two_qubit(it->kind(), it->qubit(0), it->qubit(1)));
    } else {
      inv.gates.push_back(GateSpec::single(it->kind(), it->qubit()));
    }
  }
  return inv;
}

Outcome check_simulator() {
  const auto start = Clock::now();
  Rng rng(2024);
  double worst_norm = 0, worst_round = 0, worst_brute = 0;
  int brute_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 6));
    const auto g = testing::random_genome(rng, n, 40, 5);
    const auto params = testing::random_vector(rng, static_cast<std::size_t>(g.n_params), 0, 2 * kPi);
    const auto features = testing::random_vector(rng, 5, -1, 1);
    const auto state = run_circuit(g, params, features);
    double norm = 0;
    for (const auto& a : state.amplitudes()) norm += std::norm(a);
    worst_norm = std::max(worst_norm, std::abs(norm - 1));
    QuantumState round = state;
    for (const auto& gate : inverse_of(g, params, features).gates) {
      round = apply_gate(std::move(round), gate, detail::resolve_angle(gate, {}, {}));
    }
    worst_round = std::max(worst_round, std::abs(std::norm(round.amplitudes()[0]) - 1));
    if (n <= 3) {
      ++brute_count;
      const auto oracle = testing::oracle_run(g, params, features);
      for (std::size_t i = 0; i < state.amplitudes().size(); ++i) {
        worst_brute = std::max(worst_brute, std::abs(state.amplitudes()[i] - oracle(static_cast<Eigen::Index>(i))));
      }
    }
  }
  const double secs = seconds_since(start);
  const bool pass = worst_norm < 1e-9 && worst_round < 1e-9 && worst_brute < 1e-9 && secs < 60;
  return {pass, "200 circuits (" + std::to_string(brute_count) + " brute-forced), max |norm-1| " +
                    fmt(worst_norm) + ", round trip " + fmt(worst_round) + ", brute force " +
                    fmt(worst_brute) + ", " + fmt(secs, 3) + " s"};
}

double batch_loss(const CircuitGenome& g, const std::vector<double>& params,
                  const std::vector<std::vector<double>>& xs, const std::vector<double>& ys,
                  const std::vector<int>& measure) {
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = predict(g, params, xs[i], measure) - ys[i];
    s += e * e;
  }
  return s / static_cast<double>(xs.size());
}

Outcome check_gradients() {
  const auto start = Clock::now();
  Rng rng(77);
  double worst = 0;
  int instances = 0;
  while (instances < 50) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 4));
    const auto g = testing::random_genome(rng, n, 24, 4);
    if (g.n_params == 0) continue;
    ++instances;
    const auto params = testing::random_vector(rng, static_cast<std::size_t>(g.n_params), 0, 2 * kPi);
    std::vector<std::vector<double>> xs;
    std::vector<double> ys;
    const int batch = 1 + static_cast<int>(uniform_index(rng, 8));
    for (int i = 0; i < batch; ++i) {
      xs.push_back(testing::random_vector(rng, 4, -1, 1));
      ys.push_back(uniform(rng, -1, 1));
    }
    std::vector<int> measure{0};
    if (n > 1) measure.push_back(n - 1);
    const auto got = param_shift_grad(g, params, xs, ys, measure);
    const double h = 1e-4;
    for (int k = 0; k < g.n_params; ++k) {
      auto plus = params, minus = params;
      plus[static_cast<std::size_t>(k)] += h;
      minus[static_cast<std::size_t>(k)] -= h;
      const double fd = (batch_loss(g, plus, xs, ys, measure) - batch_loss(g, minus, xs, ys, measure)) / (2 * h);
      worst = std::max(worst, std::abs(got.grad[static_cast<std::size_t>(k)] - fd));
    }
  }
  const double secs = seconds_since(start);
  return {worst < 1e-5 && secs < 120,
          "50 instances, max |shift - fd| " + fmt(worst) + ", " + fmt(secs, 3) + " s"};
}

Eigen::MatrixXd random_similarity(Rng& rng, Eigen::Index n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) m(i, j) = m(j, i) = uniform01(rng);
  }
  return m;
}

Outcome check_scoring_algebra() {
  Rng rng(5);
  double eq_gap = 0, eq1_hand_gap = 0;
  bool exact_one = true, below_one = true, weights_ones = true;
  for (int trial = 0; trial < 20; ++trial) {
    SyntheticSpec s;
    s.n_samples = 60;
    s.imbalance_ratio = 1.0;
    s.seed = static_cast<std::uint64_t>(trial);
    const auto balanced = make_synthetic(s);
    ScoringConfig sc;
    sc.subset_size = 16;
    sc.subset_seed = static_cast<std::uint64_t>(trial);
    const auto ctx = ScoringContext::build(balanced, sc);
    weights_ones = weights_ones && (ctx.weights.entries.array() == 1.0).all();
    const SimilarityMatrix rc{random_similarity(rng, static_cast<Eigen::Index>(ctx.rows.size()))};
    const double eq1 = repcap_for_variant(rc, ctx, ScoreVariant::kEq1);
    eq_gap = std::max(eq_gap, std::abs(eq1 - repcap_for_variant(rc, ctx, ScoreVariant::kEq2Weighted)));
    double sq = 0;
    const auto d = static_cast<Eigen::Index>(ctx.rows.size());
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const double ref = ctx.targets[static_cast<std::size_t>(i)] == ctx.targets[static_cast<std::size_t>(j)] ? 1.0 : 0.0;
        sq += (rc.entries(i, j) - ref) * (rc.entries(i, j) - ref);
      }
    }
    eq1_hand_gap = std::max(eq1_hand_gap, std::abs(eq1 - (1 - sq / (2.0 * 2 * static_cast<double>(d * d)))));

    s.imbalance_ratio = 6.0;
    const auto ictx = ScoringContext::build(make_synthetic(s), sc);
    const SimilarityMatrix ideal{ictx.weights.entries.cwiseProduct(ictx.reference.entries)};
    exact_one = exact_one && repcap_for_variant(ideal, ictx, ScoreVariant::kEq2Weighted) == 1.0;
    const SimilarityMatrix plain{ictx.reference.entries};
    exact_one = exact_one && repcap_for_variant(plain, ictx, ScoreVariant::kEq1) == 1.0;
    SimilarityMatrix nudged = ideal;
    nudged.entries(0, 1) += 0.01;
    below_one = below_one && repcap_for_variant(nudged, ictx, ScoreVariant::kEq2Weighted) < 1.0;
  }
  const double sigma = 0.37;
  const std::vector<double> ys{0.1, 0.1 + sigma * std::sqrt(2.0), 0.1 + sigma, 0.1 + 2 * sigma};
  const auto ref = reference_regression(ys, sigma).entries;
  const double gauss_gap = std::max({std::abs(ref(0, 1) - std::exp(-1.0)), std::abs(ref(0, 2) - std::exp(-0.5)),
                                     std::abs(ref(0, 3) - std::exp(-2.0)), std::abs(ref(1, 1) - 1.0)});
  const bool pass = weights_ones && eq_gap <= 1e-12 && eq1_hand_gap <= 1e-12 && exact_one && below_one &&
                    gauss_gap <= 1e-12;
  return {pass, "balanced weighted-unweighted gap " + fmt(eq_gap) + ", unweighted vs hand " + fmt(eq1_hand_gap) +
                    ", ideal R_c gives 1 exactly: " + (exact_one && below_one ? "yes" : "no") +
                    ", Gaussian reference gap " + fmt(gauss_gap)};
}

Outcome check_noise() {
  const auto start = Clock::now();
  Rng rng(99);
  double zero_gap = 0;
  int increases = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 4));
    const auto g = testing::random_genome(rng, n, 30, 4);
    zero_gap = std::max(zero_gap, std::abs(cnr(g, line_device(n), 16, trial) - 1.0));
    const auto dev = line_device(n, 2e-3, 2e-2, 1e-2);
    const double base = cnr(g, dev, 16, trial);
    const double doubled = cnr(g, dev.scaled_noise(2.0), 16, trial);
    if (doubled > base + 1e-12) ++increases;
  }
  double worst_flat = 0;
  bool pow2 = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 6));
    const auto dist = run_noiseless_dist(snap_to_clifford(testing::random_genome(rng, n, 30, 3), trial));
    std::vector<double> nonzero;
    for (double p : dist) {
      if (p > 1e-9) nonzero.push_back(p);
    }
    const auto support = nonzero.size();
    pow2 = pow2 && support > 0 && (support & (support - 1)) == 0;
    for (double p : nonzero) worst_flat = std::max(worst_flat, std::abs(p - 1.0 / static_cast<double>(support)));
  }
  const bool pass = zero_gap <= 1e-9 && increases == 0 && pow2 && worst_flat <= 1e-9;
  return {pass, "zero-noise |CNR-1| " + fmt(zero_gap) + ", increases under 2x noise " + std::to_string(increases) +
                    "/20, 100 replicas flat within " + fmt(worst_flat) + ", " + fmt(seconds_since(start), 3) + " s"};
}

// Brute-force metric oracles.
double oracle_rank(const std::vector<double>& v, std::size_t i) {
  double less = 0, equal = 0;
  for (double x : v) {
    if (x < v[i]) less += 1;
    if (x == v[i]) equal += 1;
  }
  return less + (equal + 1) / 2;
}

double oracle_spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> rx(n), ry(n);
  for (std::size_t i = 0; i < n; ++i) {
    rx[i] = oracle_rank(x, i);
    ry[i] = oracle_rank(y, i);
  }
  const double mean = (static_cast<double>(n) + 1) / 2;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  return sxy / std::sqrt(sxx * syy);
}

double oracle_ap(const std::vector<double>& s, const std::vector<double>& y) {
  std::set<double, std::greater<>> thresholds(s.begin(), s.end());
  double positives = 0;
  for (double l : y) positives += l > 0;
  double ap = 0, prev_recall = 0;
  for (double t : thresholds) {
    double tp = 0, predicted = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= t) {
        predicted += 1;
        tp += y[i] > 0;
      }
    }
    const double recall = tp / positives;
    ap += (recall - prev_recall) * (tp / predicted);
    prev_recall = recall;
  }
  return ap;
}

Outcome check_metrics() {
  Rng rng(123);
  int rank_mismatch = 0;
  double worst = 0;
  int checked_spearman = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + uniform_index(rng, 19);
    std::vector<double> scores(n), labels(n), other(n);
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] = std::round(uniform(rng, -1, 1) * 4) / 4;
      other[i] = std::round(uniform(rng, -1, 1) * 3) / 3;
      labels[i] = uniform01(rng) < 0.5 ? 1.0 : -1.0;
    }
    labels[0] = 1.0;
    labels[1] = -1.0;
    shuffle(std::span<double>(labels), rng);
    const auto ranks = average_ranks(scores);
    for (std::size_t i = 0; i < n; ++i) rank_mismatch += ranks[i] != oracle_rank(scores, i);
    const auto rep = classification_metrics(scores, labels);
    double tp = 0, fp = 0, fn = 0, correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool pred = scores[i] >= 0, pos = labels[i] > 0;
      correct += pred == pos;
      tp += pred && pos;
      fp += pred && !pos;
      fn += !pred && pos;
    }
    const double f1 = tp == 0 ? 0.0 : 2 * tp / (2 * tp + fp + fn);
    worst = std::max({worst, std::abs(*rep.accuracy - correct / static_cast<double>(n)), std::abs(*rep.f1 - f1),
                      std::abs(*rep.pr_auc - oracle_ap(scores, labels))});
    const bool varied = std::adjacent_find(scores.begin(), scores.end(), std::not_equal_to<>()) != scores.end() &&
                        std::adjacent_find(other.begin(), other.end(), std::not_equal_to<>()) != other.end();
    if (n >= 3 && varied) {
      ++checked_spearman;
      worst = std::max(worst, std::abs(spearman(scores, other) - oracle_spearman(scores, other)));
    }
  }
  return {rank_mismatch == 0 && worst <= 1e-12,
          "100 instances (" + std::to_string(checked_spearman) + " with Spearman), rank mismatches " +
              std::to_string(rank_mismatch) + ", max arithmetic gap " + fmt(worst)};
}

Outcome check_trainability() {
  const auto start = Clock::now();
  SyntheticSpec s;
  s.n_samples = 200;
  s.n_features = 16;
  s.noise_level = 0.0;
  s.seed = 7;
  const auto ds = make_synthetic(s);
  const auto train_set = ds.select(Split::kTrain);
  const auto test_set = ds.select(Split::kTest);
  GeneratorConfig gc;
  gc.n_candidates = 10;
  gc.gate_budget = 40;
  gc.n_features = 16;
  gc.seed = 7;
  const auto device = load_device(fs::path(QCS_CONFIG_DIR) / "device_6q.json");
  const auto candidates = generate_candidates(device, gc);
  TrainConfig tc;
  tc.seed = 7;
  std::string tried;
  double best = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& g = candidates[i];
    if (g.n_params < 4) continue;
    const auto rep = train(g, train_set, tc);
    const auto preds = predict_all(g, rep.params, test_set, tc.measurement_qubits);
    const double acc = *classification_metrics(preds, test_set.targets).accuracy;
    tried += (tried.empty() ? "" : ", ") + std::string("c") + std::to_string(i) + "(" +
             std::to_string(g.n_params) + " params)=" + fmt(acc, 3);
    best = std::max(best, acc);
    if (acc >= 0.95 || seconds_since(start) > 240) break;
  }
  const double secs = seconds_since(start);
  return {best >= 0.95 && secs < 300, "test accuracy " + tried + ", " + fmt(secs, 3) + " s"};
}

RunConfig desk_config(const std::string& name, std::uint64_t seed, const fs::path& out) {
  RunOverrides ov;
  ov.seed = seed;
  ov.out_dir = out;
  return load_run_config(fs::path(QCS_CONFIG_DIR) / name, ov);
}

fs::path run_desk(const std::string& name, std::uint64_t seed, const std::string& tag) {
  const fs::path out = work_root() / (tag + "_s" + std::to_string(seed));
  fs::remove_all(out);
  Pipeline p(desk_config(name, seed, out));
  p.run_all();
  return out;
}

std::map<std::string, double> read_rhos(const fs::path& run) {
  std::map<std::string, double> rhos;
  std::ifstream in(run / "correlation.csv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("variant,", 0) == 0) continue;
    std::stringstream ss(line);
    std::string variant, metric, n, rho;
    std::getline(ss, variant, ',');
    std::getline(ss, metric, ',');
    std::getline(ss, n, ',');
    std::getline(ss, rho, ',');
    rhos[variant] = std::stod(rho);
  }
  return rhos;
}

Outcome check_directional() {
  const auto start = Clock::now();
  std::vector<double> eq1, eq2;
  std::string detail;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto rhos = read_rhos(run_desk("desk_classification.json", seed, "classification"));
    eq1.push_back(rhos.at("eq1"));
    eq2.push_back(rhos.at("eq2_weighted"));
    detail += "seed " + std::to_string(seed) + ": unweighted " + fmt(eq1.back(), 3) + " weighted " +
              fmt(eq2.back(), 3) + "; ";
  }
  const double m1 = median(eq1), m2 = median(eq2);
  const double secs = seconds_since(start);
  return {m2 - m1 >= 0.15 && m2 > 0 && secs < 1800,
          detail + "medians " + fmt(m1, 3) + " / " + fmt(m2, 3) + ", gap " + fmt(m2 - m1, 3) + " (need >= 0.15), " +
              fmt(secs, 4) + " s"};
}

Outcome check_regression() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto run = run_desk("desk_regression.json", seed, "regression");
    const auto cards = read_scorecards(run / "scores_regression_gaussian.csv");
    std::map<int, double> mse;
    for (const auto& row : read_metrics(run / "metrics.csv")) {
      if (row.status == "ok") mse[row.circuit_id] = row.report.mse;
    }
    const std::size_t decile = (cards.size() + 9) / 10;
    auto by_score = cards;
    std::stable_sort(by_score.begin(), by_score.end(),
                     [](const ScoreCard& a, const ScoreCard& b) { return a.final_score > b.final_score; });
    std::vector<std::pair<double, int>> by_mse;
    for (const auto& [id, m] : mse) by_mse.emplace_back(m, id);
    std::sort(by_mse.rbegin(), by_mse.rend());
    std::set<int> worst;
    for (std::size_t i = 0; i < decile && i < by_mse.size(); ++i) worst.insert(by_mse[i].second);
    int overlap = 0;
    for (std::size_t i = 0; i < decile; ++i) overlap += worst.count(by_score[i].circuit_id) > 0;
    pass = pass && overlap == 0 && mse.size() == cards.size();
    detail += "seed " + std::to_string(seed) + ": overlap " + std::to_string(overlap) + "/" +
              std::to_string(decile) + "; ";
  }
  return {pass, detail + fmt(seconds_since(start), 4) + " s"};
}

Outcome check_reproducibility() {
  const fs::path first = work_root() / "classification_s1";
  if (!fs::exists(first / "correlation.csv")) run_desk("desk_classification.json", 1, "classification");
  const auto second = run_desk("desk_classification.json", 1, "rerun");
  int compared = 0, differ = 0;
  std::string bad;
  for (const auto& entry : fs::directory_iterator(first)) {
    const auto name = entry.path().filename().string();
    const bool relevant = name.rfind("scores_", 0) == 0 || name == "metrics.csv" || name == "correlation.csv" ||
                          name == "manifest.csv";
    if (!relevant) continue;
    ++compared;
    if (slurp(entry.path()) != slurp(second / name)) {
      ++differ;
      bad += " " + name;
    }
  }
  return {compared >= 5 && differ == 0,
          std::to_string(compared) + " artifacts compared, " + std::to_string(differ) + " differ" + bad};
}

}  // namespace
}  // namespace qcs

int main(int argc, char** argv) {
  using namespace qcs;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"simulator", check_simulator},
      {"gradients", check_gradients},
      {"scoring-algebra", check_scoring_algebra},
      {"noise-cnr", check_noise},
      {"metric-oracles", check_metrics},
      {"trainability", check_trainability},
      {"directional-replication", check_directional},
      {"regression-smoke", check_regression},
      {"reproducibility", check_reproducibility},
  };
  std::set<std::string> only(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    if (!only.empty() && only.count(name) == 0) continue;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
