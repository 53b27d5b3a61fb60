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

#include "qcs/pipeline/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcs/common.hpp"
#include "qcs/random.hpp"

namespace qcs {

using nlohmann::json;

namespace {

// Stream ids for seeds derived from the global seed.
enum SeedStream : std::uint64_t {
  kGeneratorStream = 101,
  kSyntheticStream = 102,
  kSubsetStream = 103,
  kTrainStream = 105,
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string("config key '") + key + "': " + e.what());
  }
}

int count_feature_columns(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string header;
  while (std::getline(in, header)) {
    if (!header.empty() && header[0] != '#') break;
  }
  int commas = 0;
  for (char c : header) commas += c == ',';
  return std::max(0, commas - 1);
}

std::string format_u64(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig parse_run_config(const std::string& json_text, const std::filesystem::path& base_dir,
                           const RunOverrides& overrides) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("run config: ") + e.what());
  }
  RunConfig c;
  c.seed = overrides.seed ? *overrides.seed : get_or<std::uint64_t>(j, "seed", 0);

  // Device.
  if (!j.contains("device")) throw Error("run config: missing 'device'");
  if (j["device"].is_string()) {
    c.device_path = resolve(base_dir, j["device"].get<std::string>());
    if (!std::filesystem::exists(c.device_path)) {
      throw Error("device file not found: " + c.device_path.string());
    }
    c.device = load_device(c.device_path);
  } else {
    c.device = parse_device_json(j["device"].dump());
  }

  // Data source.
  if (!j.contains("dataset")) throw Error("run config: missing 'dataset'");
  const json& d = j["dataset"];
  if (d.contains("synthetic")) {
    const json& s = d["synthetic"];
    SyntheticSpec spec;
    const auto task = task_kind_from_string(get_or<std::string>(s, "task", "classification"));
    if (!task) throw Error("run config: unknown dataset task");
    spec.task = *task;
    spec.n_samples = get_or(s, "n_samples", spec.n_samples);
    spec.n_features = get_or(s, "n_features", spec.n_features);
    spec.imbalance_ratio = get_or(s, "imbalance_ratio", spec.imbalance_ratio);
    spec.noise_level = get_or(s, "noise_level", spec.noise_level);
    spec.test_fraction = get_or(s, "test_fraction", spec.test_fraction);
    spec.seed = get_or<std::uint64_t>(s, "seed", derive_seed(c.seed, kSyntheticStream));
    c.data.task = spec.task;
    c.data.synthetic = spec;
  } else if (d.contains("path")) {
    const auto task = task_kind_from_string(get_or<std::string>(d, "task", "classification"));
    if (!task) throw Error("run config: unknown dataset task");
    c.data.task = *task;
    c.data.path = resolve(base_dir, d["path"].get<std::string>());
    if (!std::filesystem::exists(*c.data.path)) {
      throw Error("dataset file not found: " + c.data.path->string());
    }
  } else {
    throw Error("run config: 'dataset' needs 'path' or 'synthetic'");
  }
  const int data_features =
      c.data.synthetic ? c.data.synthetic->n_features
                       : std::min(count_feature_columns(*c.data.path), kDefaultMaxFeatures);

  // Generator.
  const json g = j.value("generator", json::object());
  c.generator.n_candidates = get_or(g, "n_candidates", c.generator.n_candidates);
  c.generator.gate_budget = get_or(g, "gate_budget", c.generator.gate_budget);
  c.generator.embed_fraction = get_or(g, "embed_fraction", c.generator.embed_fraction);
  c.generator.trainable_fraction = get_or(g, "trainable_fraction", c.generator.trainable_fraction);
  c.generator.entangle_fraction = get_or(g, "entangle_fraction", c.generator.entangle_fraction);
  c.generator.n_features = get_or(g, "n_features", data_features);
  c.generator.seed = get_or<std::uint64_t>(g, "seed", derive_seed(c.seed, kGeneratorStream));
  if (const auto v = c.generator.violations(); !v.empty()) {
    throw Error("run config generator: " + v.front());
  }

  // Scoring.
  const json s = j.value("scoring", json::object());
  c.scoring.subset_size = get_or(s, "subset_size", c.scoring.subset_size);
  c.scoring.n_param_draws = get_or(s, "n_param_draws", c.scoring.n_param_draws);
  c.scoring.n_replicas = get_or(s, "n_replicas", c.scoring.n_replicas);
  c.scoring.alpha = get_or(s, "alpha", c.scoring.alpha);
  if (s.contains("sigma") && s["sigma"].is_number()) c.scoring.sigma = s["sigma"].get<double>();
  c.scoring.subset_seed = get_or<std::uint64_t>(s, "subset_seed", derive_seed(c.seed, kSubsetStream));
  if (s.contains("variants")) {
    for (const auto& name : s["variants"]) {
      const auto v = score_variant_from_string(name.get<std::string>());
      if (!v) throw Error("run config: unknown scoring variant '" + name.get<std::string>() + "'");
      c.variants.push_back(*v);
    }
  } else if (c.data.task == TaskKind::kClassification) {
    c.variants = {ScoreVariant::kEq1, ScoreVariant::kEq2Weighted};
  } else {
    c.variants = {ScoreVariant::kRegressionPlain, ScoreVariant::kRegressionGaussian};
  }
  if (overrides.variant) c.variants = {*overrides.variant};
  for (const auto v : c.variants) {
    if (task_of(v) != c.data.task) {
      throw Error("run config: variant " + std::string(to_string(v)) + " does not apply to a " +
                  std::string(to_string(c.data.task)) + " dataset");
    }
  }

  // Training.
  const json t = j.value("train", json::object());
  c.train.epochs = get_or(t, "epochs", c.train.epochs);
  c.train.batch_size = get_or(t, "batch_size", c.train.batch_size);
  c.train.learning_rate = get_or(t, "learning_rate", c.train.learning_rate);
  c.train.adam_beta1 = get_or(t, "adam_beta1", c.train.adam_beta1);
  c.train.adam_beta2 = get_or(t, "adam_beta2", c.train.adam_beta2);
  c.train.adam_eps = get_or(t, "adam_eps", c.train.adam_eps);
  c.train.measurement_qubits = get_or(t, "measurement_qubits", c.train.measurement_qubits);
  c.train.seed = get_or<std::uint64_t>(t, "seed", derive_seed(c.seed, kTrainStream));
  if (const auto v = c.train.violations(); !v.empty()) throw Error("run config train: " + v.front());
  for (int q : c.train.measurement_qubits) {
    if (q < 0 || q >= c.device.n_qubits) throw Error("run config: measurement qubit out of range");
  }
  if (t.contains("top_k") && !t["top_k"].is_null()) c.top_k = t["top_k"].get<int>();
  if (overrides.top_k) c.top_k = *overrides.top_k;
  if (c.top_k && *c.top_k < 0) throw Error("run config: top_k must be non-negative");
  if (t.contains("rank_variant")) {
    const auto v = score_variant_from_string(t["rank_variant"].get<std::string>());
    if (!v) throw Error("run config: unknown rank_variant");
    c.rank_variant = *v;
  } else {
    c.rank_variant = c.variants.back();
  }
  if (overrides.variant) c.rank_variant = *overrides.variant;

  // Correlation.
  const json cr = j.value("correlate", json::object());
  if (cr.contains("metric")) {
    const auto m = metric_field_from_string(cr["metric"].get<std::string>());
    if (!m) throw Error("run config: unknown correlate metric");
    c.metric = *m;
  } else {
    c.metric = c.data.task == TaskKind::kClassification ? MetricField::kPrAuc : MetricField::kMse;
  }
  if (overrides.metric) c.metric = *overrides.metric;

  c.out_dir = overrides.out_dir ? *overrides.out_dir
                                : resolve(base_dir, get_or<std::string>(j, "out", "qcs-run"));
  c.jobs = overrides.jobs ? *overrides.jobs : get_or(j, "jobs", 1);
  if (c.jobs < 1) throw Error("run config: jobs must be at least 1");
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path, const RunOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open run config: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), path.parent_path(), overrides);
}

std::string RunConfig::canonical_json() const {
  json j;
  j["seed"] = format_u64(seed);
  j["device"] = json::parse(device_to_json(device));
  json d;
  d["task"] = std::string(to_string(data.task));
  if (data.synthetic) {
    const auto& s = *data.synthetic;
    d["synthetic"] = {{"n_samples", s.n_samples},       {"n_features", s.n_features},
                      {"imbalance_ratio", s.imbalance_ratio}, {"noise_level", s.noise_level},
                      {"test_fraction", s.test_fraction}, {"seed", format_u64(s.seed)}};
  } else {
    d["path"] = data.path->filename().string();
  }
  j["dataset"] = d;
  j["generator"] = {{"n_candidates", generator.n_candidates},
                    {"gate_budget", generator.gate_budget},
                    {"embed_fraction", generator.embed_fraction},
                    {"trainable_fraction", generator.trainable_fraction},
                    {"entangle_fraction", generator.entangle_fraction},
                    {"n_features", generator.n_features},
                    {"seed", format_u64(generator.seed)}};
  json variant_names = json::array();
  for (auto v : variants) variant_names.push_back(std::string(to_string(v)));
  j["scoring"] = {{"subset_size", scoring.subset_size},
                  {"n_param_draws", scoring.n_param_draws},
                  {"n_replicas", scoring.n_replicas},
                  {"alpha", scoring.alpha},
                  {"sigma", scoring.sigma ? json(*scoring.sigma) : json("median")},
                  {"subset_seed", format_u64(scoring.subset_seed)},
                  {"weights", "inverse-frequency-geometric-mean"},
                  {"variants", variant_names}};
  j["train"] = {{"epochs", train.epochs},
                {"batch_size", train.batch_size},
                {"learning_rate", train.learning_rate},
                {"adam", {train.adam_beta1, train.adam_beta2, train.adam_eps}},
                {"measurement_qubits", train.measurement_qubits},
                {"seed", format_u64(train.seed)},
                {"top_k", top_k ? json(*top_k) : json("all")},
                {"rank_variant", std::string(to_string(rank_variant))}};
  j["correlate"] = {{"metric", std::string(to_string(metric))}};
  return j.dump();
}

std::string RunConfig::digest() const { return fnv1a_hex(canonical_json()); }

std::string RunConfig::scoring_digest() const {
  json j = json::parse(canonical_json());
  j.erase("train");
  j.erase("correlate");
  j["scoring"].erase("variants");
  return fnv1a_hex(j.dump());
}

}  // namespace qcs
