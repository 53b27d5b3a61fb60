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

#include "qcs/pipeline/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "qcs/circuit/generator.hpp"
#include "qcs/random.hpp"

namespace qcs {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kScoringStream = 104;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_optional(const std::optional<double>& v) { return v ? fmt_double(*v) : ""; }

std::string circuit_name(int id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "c%04d", id);
  return buf;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

/// Data rows of a table: comment lines skipped, header checked.
std::vector<std::vector<std::string>> read_table(const fs::path& path,
                                                 const std::string& expected_header) {
  std::istringstream in(read_text(path));
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != expected_header) {
        throw ParseError(path.string() + ": unexpected header '" + line + "'", line_no);
      }
      header_seen = true;
      continue;
    }
    rows.push_back(split_csv(line));
  }
  if (!header_seen) throw ParseError(path.string() + ": missing header");
  return rows;
}

template <typename T>
T parse_number(const std::string& text, const char* field) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("bad number '" + text + "'", 0, field);
  }
  return value;
}

std::optional<double> parse_optional(const std::string& text, const char* field) {
  if (text.empty()) return std::nullopt;
  return parse_number<double>(text, field);
}

constexpr const char* kManifestHeader = "circuit_id,file,seed,config_digest";
constexpr const char* kScoresHeader = "circuit_id,cnr,repcap,final_score,config_digest";
constexpr const char* kMetricsHeader =
    "circuit_id,status,n_params,mse,accuracy,f1,pr_auc,spearman_r,final_train_loss";
constexpr const char* kCorrelationHeader = "variant,metric,n,rho";

/// Runs `fn` and rethrows anything but StageError as a StageError of `stage`.
template <typename Fn>
auto in_stage(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

}  // namespace

std::uint64_t circuit_seed(std::uint64_t global_seed, std::uint64_t stream, int circuit_id) {
  return derive_seed(derive_seed(global_seed, stream), static_cast<std::uint64_t>(circuit_id));
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  jobs = std::clamp(jobs, 1, n);
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  std::vector<ManifestEntry> out;
  for (const auto& row : read_table(path, kManifestHeader)) {
    if (row.size() != 4) throw ParseError(path.string() + ": manifest row needs 4 fields");
    out.push_back({parse_number<int>(row[0], "circuit_id"), row[1],
                   parse_number<std::uint64_t>(row[2], "seed"), row[3]});
  }
  return out;
}

std::vector<ScoreCard> read_scorecards(const fs::path& path) {
  std::vector<ScoreCard> out;
  for (const auto& row : read_table(path, kScoresHeader)) {
    if (row.size() != 5) throw ParseError(path.string() + ": score row needs 5 fields");
    out.push_back({parse_number<int>(row[0], "circuit_id"), parse_number<double>(row[1], "cnr"),
                   parse_number<double>(row[2], "repcap"),
                   parse_number<double>(row[3], "final_score"), row[4]});
  }
  return out;
}

std::vector<MetricRow> read_metrics(const fs::path& path) {
  std::vector<MetricRow> out;
  for (const auto& row : read_table(path, kMetricsHeader)) {
    if (row.size() != 9) throw ParseError(path.string() + ": metric row needs 9 fields");
    MetricRow m;
    m.circuit_id = parse_number<int>(row[0], "circuit_id");
    m.status = row[1];
    m.n_params = parse_number<int>(row[2], "n_params");
    if (m.status == "ok") {
      m.report.mse = parse_number<double>(row[3], "mse");
      m.report.accuracy = parse_optional(row[4], "accuracy");
      m.report.f1 = parse_optional(row[5], "f1");
      m.report.pr_auc = parse_optional(row[6], "pr_auc");
      m.report.spearman_r = parse_optional(row[7], "spearman_r");
      m.final_train_loss = parse_number<double>(row[8], "final_train_loss");
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::string scorecards_to_csv(const std::vector<ScoreCard>& cards) {
  std::string out = std::string(kScoresHeader) + "\n";
  for (const auto& c : cards) {
    out += std::to_string(c.circuit_id) + "," + fmt_double(c.cnr) + "," + fmt_double(c.repcap) +
           "," + fmt_double(c.final_score) + "," + c.config_digest + "\n";
  }
  return out;
}

Pipeline::Pipeline(RunConfig config, std::ostream* log) : config_(std::move(config)), log_(log) {}

fs::path Pipeline::manifest_path() const { return config_.out_dir / "manifest.csv"; }
fs::path Pipeline::scores_path(ScoreVariant v) const {
  return config_.out_dir / ("scores_" + std::string(to_string(v)) + ".csv");
}
fs::path Pipeline::metrics_path() const { return config_.out_dir / "metrics.csv"; }
fs::path Pipeline::correlation_path() const { return config_.out_dir / "correlation.csv"; }

std::string Pipeline::header_line(const std::string& artifact) const {
  return "# qcsearch " + artifact + " seed=" + std::to_string(config_.seed) +
         " config_digest=" + config_.digest() + "\n";
}

void Pipeline::log(const std::string& line) const {
  if (log_) *log_ << line << "\n";
}

Dataset Pipeline::prepare_dataset() const {
  Dataset ds;
  if (config_.data.synthetic) {
    ds = make_synthetic(*config_.data.synthetic);
  } else {
    const Dataset raw = read_dataset_file(*config_.data.path, config_.data.task);
    if (config_.data.task == TaskKind::kClassification) {
      ds = preprocess_classification(raw);
    } else {
      ds = preprocess_regression(raw);
      const auto norm = normalize_dataset_targets(ds);
      if (norm.clamped > 0) {
        log("dataset: clamped " + std::to_string(norm.clamped) + " test targets to [-1, 1]");
      }
    }
  }
  if (const auto problems = validate_dataset(ds); !problems.empty()) {
    throw Error("dataset: " + problems.front());
  }
  return ds;
}

std::vector<ManifestEntry> Pipeline::generate() {
  return in_stage("generate", [&] {
    if (const auto v = config_.device.violations(); !v.empty()) {
      throw Error("invalid device: " + v.front());
    }
    const auto genomes = generate_candidates(config_.device, config_.generator);
    const fs::path dir = config_.out_dir / "genomes";
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());

    const std::string digest = config_.scoring_digest();
    std::vector<ManifestEntry> manifest;
    for (std::size_t i = 0; i < genomes.size(); ++i) {
      const int id = static_cast<int>(i);
      ManifestEntry e{id, "genomes/" + circuit_name(id) + ".qcg",
                      derive_seed(config_.generator.seed, i), digest};
      write_file_atomic(config_.out_dir / e.file,
                        save_genome(genomes[i], {"circuit " + std::to_string(id),
                                                 "seed " + std::to_string(e.seed),
                                                 "config_digest " + digest}));
      manifest.push_back(std::move(e));
    }
    std::string table = header_line("manifest") + kManifestHeader + "\n";
    for (const auto& e : manifest) {
      table += std::to_string(e.circuit_id) + "," + e.file + "," + std::to_string(e.seed) + "," +
               e.config_digest + "\n";
    }
    write_file_atomic(manifest_path(), table);
    log("generate: wrote " + std::to_string(manifest.size()) + " genomes");
    return manifest;
  });
}

std::vector<CircuitGenome> Pipeline::load_genomes(const std::vector<ManifestEntry>& manifest) const {
  std::vector<CircuitGenome> out;
  for (const auto& e : manifest) {
    const fs::path path = config_.out_dir / e.file;
    if (!fs::exists(path)) throw Error("missing genome file " + path.string());
    CircuitGenome g;
    try {
      g = load_genome(read_text(path));
    } catch (const std::exception& ex) {
      throw Error(path.string() + ": " + ex.what());
    }
    if (const auto v = validate_genome(g, config_.device); !v.empty()) {
      throw Error(path.string() + ": " + v.front());
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::map<ScoreVariant, std::vector<ScoreCard>> Pipeline::score() {
  return in_stage("score", [&] {
    if (!fs::exists(manifest_path())) {
      throw Error("manifest not found: " + manifest_path().string() + " (run generate first)");
    }
    const auto manifest = read_manifest(manifest_path());
    const auto genomes = load_genomes(manifest);
    const Dataset ds = prepare_dataset();
    for (const auto v : config_.variants) {
      if (task_of(v) != ds.task) {
        throw Error("variant " + std::string(to_string(v)) + " does not apply to a " +
                    std::string(to_string(ds.task)) + " dataset");
      }
    }
    const ScoringContext ctx = ScoringContext::build(ds, config_.scoring);
    const std::string digest = config_.scoring_digest();

    std::vector<CircuitScores> scores(genomes.size());
    parallel_for(static_cast<int>(genomes.size()), config_.jobs, [&](int i) {
      const int id = manifest[static_cast<std::size_t>(i)].circuit_id;
      scores[static_cast<std::size_t>(i)] =
          compute_circuit_scores(genomes[static_cast<std::size_t>(i)], config_.device, ctx,
                                 config_.scoring, circuit_seed(config_.seed, kScoringStream, id));
    });

    std::map<ScoreVariant, std::vector<ScoreCard>> out;
    for (const auto v : config_.variants) {
      auto& cards = out[v];
      for (std::size_t i = 0; i < genomes.size(); ++i) {
        cards.push_back(make_scorecard(manifest[i].circuit_id, scores[i], ctx, v,
                                       config_.scoring.alpha, digest));
      }
      write_file_atomic(scores_path(v), header_line("scores variant=" + std::string(to_string(v))) +
                                            scorecards_to_csv(cards));
    }
    log("score: scored " + std::to_string(genomes.size()) + " circuits under " +
        std::to_string(config_.variants.size()) + " variants");
    return out;
  });
}

std::vector<MetricRow> Pipeline::train_eval() {
  return in_stage("train-eval", [&] {
    const fs::path ranking = scores_path(config_.rank_variant);
    if (!fs::exists(ranking)) {
      throw Error("scorecards not found: " + ranking.string() + " (run score first)");
    }
    auto cards = read_scorecards(ranking);
    std::stable_sort(cards.begin(), cards.end(), [](const ScoreCard& a, const ScoreCard& b) {
      return a.final_score > b.final_score;
    });
    if (config_.top_k && static_cast<std::size_t>(*config_.top_k) < cards.size()) {
      cards.resize(static_cast<std::size_t>(*config_.top_k));
    }
    std::vector<int> ids;
    for (const auto& c : cards) ids.push_back(c.circuit_id);
    std::sort(ids.begin(), ids.end());

    std::vector<MetricRow> rows(ids.size());
    if (!ids.empty()) {
      const auto manifest = read_manifest(manifest_path());
      std::map<int, ManifestEntry> by_id;
      for (const auto& e : manifest) by_id[e.circuit_id] = e;
      std::vector<ManifestEntry> selected;
      for (int id : ids) {
        const auto it = by_id.find(id);
        if (it == by_id.end()) throw Error("circuit " + std::to_string(id) + " not in manifest");
        selected.push_back(it->second);
      }
      const auto genomes = load_genomes(selected);
      const Dataset ds = prepare_dataset();
      const Dataset train_ds = ds.select(Split::kTrain);
      const Dataset test_ds = ds.select(Split::kTest);
      const fs::path train_dir = config_.out_dir / "train";
      fs::create_directories(train_dir);

      parallel_for(static_cast<int>(ids.size()), config_.jobs, [&](int i) {
        const auto k = static_cast<std::size_t>(i);
        MetricRow& row = rows[k];
        row.circuit_id = ids[k];
        row.n_params = genomes[k].n_params;
        try {
          TrainConfig tc = config_.train;
          tc.seed = derive_seed(config_.train.seed, static_cast<std::uint64_t>(ids[k]));
          const TrainReport rep = train(genomes[k], train_ds, tc);
          const auto preds = predict_all(genomes[k], rep.params, test_ds, tc.measurement_qubits);
          row.report = ds.task == TaskKind::kClassification
                           ? classification_metrics(preds, test_ds.targets)
                           : regression_metrics(preds, test_ds.targets);
          row.final_train_loss = rep.loss_trace.back();
          row.status = "ok";

          const std::string name = circuit_name(ids[k]);
          std::string trace = header_line("train_trace circuit=" + std::to_string(ids[k])) +
                              "epoch,loss\n";
          for (std::size_t e = 0; e < rep.loss_trace.size(); ++e) {
            trace += std::to_string(e + 1) + "," + fmt_double(rep.loss_trace[e]) + "\n";
          }
          write_file_atomic(train_dir / (name + "_trace.csv"), trace);
          std::string params = header_line("params circuit=" + std::to_string(ids[k]));
          for (const double p : rep.params) params += fmt_double(p) + "\n";
          write_file_atomic(train_dir / (name + "_params.txt"), params);
        } catch (const std::exception& e) {
          std::string reason = e.what();
          std::replace(reason.begin(), reason.end(), ',', ';');
          std::replace(reason.begin(), reason.end(), '\n', ' ');
          row.status = "failed: " + reason;
          row.report = {};
        }
      });
    }

    std::string table = header_line("metrics") + kMetricsHeader + "\n";
    int failed = 0;
    for (const auto& r : rows) {
      const bool ok = r.status == "ok";
      failed += !ok;
      table += std::to_string(r.circuit_id) + "," + r.status + "," + std::to_string(r.n_params) +
               "," + (ok ? fmt_double(r.report.mse) : "") + "," + fmt_optional(r.report.accuracy) +
               "," + fmt_optional(r.report.f1) + "," + fmt_optional(r.report.pr_auc) + "," +
               fmt_optional(r.report.spearman_r) + "," +
               (ok ? fmt_double(r.final_train_loss) : "") + "\n";
    }
    write_file_atomic(metrics_path(), table);
    log("train-eval: trained " + std::to_string(rows.size()) + " circuits (" +
        std::to_string(failed) + " failed)");
    for (const auto& r : rows) {
      if (r.status != "ok") log("train-eval: circuit " + std::to_string(r.circuit_id) + " " + r.status);
    }
    return rows;
  });
}

std::vector<CorrelationRow> Pipeline::correlate() {
  return in_stage("correlate", [&] {
    if (!fs::exists(metrics_path())) {
      throw Error("metric table not found: " + metrics_path().string() + " (run train-eval first)");
    }
    std::map<int, MetricReport> metrics;
    for (const auto& r : read_metrics(metrics_path())) {
      if (r.status == "ok") metrics[r.circuit_id] = r.report;
    }
    std::map<std::string, std::vector<ScoreCard>> cards;
    for (const auto v : config_.variants) {
      const fs::path path = scores_path(v);
      if (!fs::exists(path)) throw Error("scorecards not found: " + path.string());
      cards[std::string(to_string(v))] = read_scorecards(path);
    }
    const auto rows = correlation_report(cards, metrics, config_.metric);

    std::string table = header_line("correlation") + kCorrelationHeader + "\n";
    for (const auto& row : rows) {
      table += row.variant + "," + std::string(to_string(row.metric)) + "," +
               std::to_string(row.n_circuits) + "," + fmt_double(row.rho) + "\n";
      write_file_atomic(config_.out_dir / ("scatter_" + row.variant + ".csv"),
                        header_line("scatter variant=" + row.variant) + scatter_csv(row));
      std::string svg = scatter_svg(row);
      svg.insert(0, "<!-- " + header_line("scatter variant=" + row.variant).substr(2, std::string::npos));
      svg.insert(svg.find('\n'), " -->");
      write_file_atomic(config_.out_dir / ("scatter_" + row.variant + ".svg"), svg);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", row.rho);
      log("correlate: " + row.variant + " vs " + std::string(to_string(row.metric)) +
          " rho = " + buf + " (n = " + std::to_string(row.n_circuits) + ")");
    }
    write_file_atomic(correlation_path(), table);
    return rows;
  });
}

void Pipeline::run_all() {
  generate();
  score();
  train_eval();
  if (config_.top_k && *config_.top_k == 0) {
    log("correlate: skipped (top_k = 0)");
    return;
  }
  correlate();
}

}  // namespace qcs
