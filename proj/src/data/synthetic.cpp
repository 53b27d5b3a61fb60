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

#include "qcs/data/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcs/common.hpp"
#include "qcs/random.hpp"

namespace qcs {

namespace {

void check_spec(const SyntheticSpec& spec) {
  if (spec.n_samples < 10) throw std::invalid_argument("synthetic: need at least 10 samples");
  if (spec.n_features < 2) throw std::invalid_argument("synthetic: need at least 2 features");
  if (!(spec.noise_level >= 0.0 && spec.noise_level <= 1.0)) {
    throw std::invalid_argument("synthetic: noise_level must lie in [0, 1]");
  }
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0)) {
    throw std::invalid_argument("synthetic: test_fraction must lie in (0, 1)");
  }
  if (spec.task == TaskKind::kClassification && !(spec.imbalance_ratio > 0.0)) {
    throw std::invalid_argument("synthetic: imbalance_ratio must be positive");
  }
}

std::vector<double> unit_direction(int n, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(n));
  double norm = 0.0;
  for (auto& x : v) {
    x = standard_normal(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

Dataset make_classification(const SyntheticSpec& spec, Rng& rng) {
  const int d = spec.n_samples;
  const auto n_pos = static_cast<int>(
      std::lround(d * spec.imbalance_ratio / (spec.imbalance_ratio + 1.0)));
  const int n_neg = d - n_pos;
  if (n_pos < 2 || n_neg < 2) throw std::invalid_argument("synthetic: ratio leaves a class nearly empty");

  const auto nf = static_cast<std::size_t>(spec.n_features);
  std::vector<double> centre(nf), sign(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    centre[f] = uniform(rng, -0.45, 0.45);
    sign[f] = uniform_index(rng, 2) ? 1.0 : -1.0;
  }
  const double half_gap = 0.5 * (1.0 - spec.noise_level) * kSyntheticGap;

  Dataset ds;
  ds.task = TaskKind::kClassification;
  ds.n_features = spec.n_features;
  std::vector<int> labels(static_cast<std::size_t>(n_pos), 1);
  labels.resize(static_cast<std::size_t>(d), -1);
  shuffle(std::span<int>(labels), rng);
  for (const int y : labels) {
    std::vector<double> x(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      x[f] = centre[f] + y * sign[f] * half_gap +
             uniform(rng, -kSyntheticJitter, kSyntheticJitter);
    }
    ds.features.push_back(std::move(x));
    ds.targets.push_back(y);
  }

  // Stratified split: the first round(count * test_fraction) rows of each class
  // (in shuffled order) go to test.
  const auto test_pos = std::lround(n_pos * spec.test_fraction);
  const auto test_neg = std::lround(n_neg * spec.test_fraction);
  long seen_pos = 0, seen_neg = 0;
  for (const double y : ds.targets) {
    const bool to_test = y > 0 ? seen_pos++ < test_pos : seen_neg++ < test_neg;
    ds.splits.push_back(to_test ? Split::kTest : Split::kTrain);
  }
  return ds;
}

Dataset make_regression(const SyntheticSpec& spec, Rng& rng) {
  const auto nf = static_cast<std::size_t>(spec.n_features);
  const auto a = unit_direction(spec.n_features, rng);
  const auto b = unit_direction(spec.n_features, rng);
  const double scale = std::sqrt(3.0);  // U[-1,1] has variance 1/3

  Dataset ds;
  ds.task = TaskKind::kRegression;
  ds.n_features = spec.n_features;
  for (int i = 0; i < spec.n_samples; ++i) {
    std::vector<double> x(nf);
    double u1 = 0.0, u2 = 0.0;
    for (std::size_t f = 0; f < nf; ++f) {
      x[f] = uniform(rng, -1.0, 1.0);
      u1 += a[f] * x[f];
      u2 += b[f] * x[f];
    }
    u1 *= scale;
    u2 *= scale;
    const double y = std::tanh(u1) + 0.5 * std::sin(kPi * u2 / 2.0) +
                     spec.noise_level * 0.25 * standard_normal(rng);
    ds.features.push_back(std::move(x));
    ds.targets.push_back(y);
  }
  const auto [lo, hi] = std::minmax_element(ds.targets.begin(), ds.targets.end());
  const double mn = *lo, mx = *hi;
  for (auto& y : ds.targets) y = std::clamp(2.0 * (y - mn) / (mx - mn) - 1.0, -1.0, 1.0);

  std::vector<std::size_t> order(ds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(std::span<std::size_t>(order), rng);
  const auto n_test = static_cast<std::size_t>(std::lround(spec.n_samples * spec.test_fraction));
  ds.splits.assign(ds.size(), Split::kTrain);
  for (std::size_t i = 0; i < n_test; ++i) ds.splits[order[i]] = Split::kTest;
  return ds;
}

}  // namespace

Dataset make_synthetic(const SyntheticSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  return spec.task == TaskKind::kClassification ? make_classification(spec, rng)
                                                : make_regression(spec, rng);
}

}  // namespace qcs
